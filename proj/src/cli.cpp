#include "feq/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "feq/detail/overloaded.hpp"
#include "feq/equation.hpp"
#include "feq/errors.hpp"
#include "feq/expr.hpp"
#include "feq/initial_data.hpp"
#include "feq/interval.hpp"
#include "feq/numfmt.hpp"
#include "feq/oracle.hpp"
#include "feq/parity.hpp"
#include "feq/penlp.hpp"
#include "feq/scale.hpp"
#include "feq/shift_scale.hpp"
#include "feq/three_term.hpp"

namespace feq::cli {

using detail::overloaded;

namespace {

/// Bad invocation: missing or contradictory settings, unreadable numbers.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::optional<std::string> equation;
    std::optional<std::string> b;
    std::optional<std::string> init_set;
    std::vector<std::string> init_fn;
    std::vector<std::string> init_on;
    std::optional<std::string> tol;
    std::optional<std::string> domain;
    std::optional<std::string> x;
    std::optional<std::string> depths;
    std::optional<std::string> from;
    std::optional<std::string> to;
    std::optional<std::string> step;
    bool unsafe = false;
};

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

// Flat key=value file; '#' starts a comment line. init-fn and init-on may repeat.
Settings read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    Settings s;
    const std::map<std::string, std::optional<std::string> Settings::*> scalars{
        {"equation", &Settings::equation}, {"b", &Settings::b},         {"init-set", &Settings::init_set},
        {"tol", &Settings::tol},           {"domain", &Settings::domain}, {"x", &Settings::x},
        {"depths", &Settings::depths},     {"from", &Settings::from},   {"to", &Settings::to},
        {"step", &Settings::step},
    };
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(std::string_view(t).substr(0, eq));
        const std::string value = trim(std::string_view(t).substr(eq + 1));
        if (auto it = scalars.find(key); it != scalars.end()) {
            s.*(it->second) = value;
        } else if (key == "init-fn") {
            s.init_fn.push_back(value);
        } else if (key == "init-on") {
            s.init_on.push_back(value);
        } else if (key == "unsafe") {
            s.unsafe = value == "true" || value == "1" || value == "yes";
        } else {
            throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return s;
}

// Command-line values win over the config file.
Settings merge(const Settings& flags, const Settings& conf) {
    Settings s = conf;
    auto take = [](std::optional<std::string>& dst, const std::optional<std::string>& src) {
        if (src) dst = src;
    };
    take(s.equation, flags.equation);
    take(s.b, flags.b);
    take(s.init_set, flags.init_set);
    take(s.tol, flags.tol);
    take(s.domain, flags.domain);
    take(s.x, flags.x);
    take(s.depths, flags.depths);
    take(s.from, flags.from);
    take(s.to, flags.to);
    take(s.step, flags.step);
    if (!flags.init_fn.empty() || !flags.init_on.empty()) {
        s.init_fn = flags.init_fn;
        s.init_on = flags.init_on;
    }
    s.unsafe = s.unsafe || flags.unsafe;
    return s;
}

double number(const std::string& text, const std::string& what) {
    if (auto v = parse_real(trim(text))) return *v;
    throw UsageError(what + ": '" + text + "' is not a number");
}

double required_number(const std::optional<std::string>& text, const std::string& what) {
    if (!text) throw UsageError("missing " + what);
    return number(*text, what);
}

std::vector<int> depth_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const double v = number(item, "--depths");
        if (v != std::floor(v) || std::fabs(v) > 1e6) throw UsageError("--depths must be integers");
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw UsageError("--depths is empty");
    return out;
}

EquationSpec equation_of(const Settings& s) {
    if (!s.equation) throw UsageError("missing --equation");
    const std::string& name = *s.equation;
    if (name == "periodic") {
        if (s.b && number(*s.b, "--b") != 1.0) throw UsageError("the periodic equation has b = 1");
        return family::ShiftScale{1.0};
    }
    if (name == "shift-scale") return family::ShiftScale{required_number(s.b, "--b")};
    if (name == "scale") return family::PureScale{required_number(s.b, "--b")};
    if (name == "even") return family::EvenParity{};
    if (name == "odd") return family::OddParity{};
    if (name == "three-term") return family::ThreeTerm{};
    throw UsageError("unknown equation '" + name + "'");
}

InitialData initial_of(const Settings& s) {
    if (s.init_fn.empty()) throw UsageError("missing --init-fn");
    if (!s.init_on.empty()) {
        if (s.init_on.size() != s.init_fn.size())
            throw UsageError("each --init-fn needs a matching --init-on (" + std::to_string(s.init_fn.size()) +
                             " functions, " + std::to_string(s.init_on.size()) + " intervals)");
        std::vector<Piece> pieces;
        std::vector<Interval> parts;
        for (std::size_t i = 0; i < s.init_fn.size(); ++i) {
            pieces.push_back(Piece{parse_interval(s.init_on[i]), parse_expr(s.init_fn[i])});
            parts.push_back(pieces.back().on);
        }
        IntervalUnion set = s.init_set ? parse_interval_union(*s.init_set) : IntervalUnion::normalize(parts);
        return InitialData{std::move(set), std::move(pieces)};
    }
    if (s.init_fn.size() != 1) throw UsageError("several --init-fn values need --init-on intervals");
    if (!s.init_set) throw UsageError("missing --init-set");
    return InitialData::uniform(parse_interval_union(*s.init_set), parse_expr(s.init_fn.front()));
}

ParityDomain parity_domain_of(const Settings& s) {
    if (!s.domain) throw UsageError("the parity equations need --domain, either R or a symmetric (-a,a)");
    const std::string d = trim(*s.domain);
    if (d == "R" || d == "real") return ParityDomain::whole();
    const Interval iv = parse_interval(d);
    if (iv.lo_closed() || iv.hi_closed() || iv.lo() != -iv.hi())
        throw UsageError("--domain must be R or an open symmetric interval (-a,a)");
    return ParityDomain::symmetric(iv.hi());
}

using Problem = std::variant<ShiftScaleProblem, ScaleProblem, ParityProblem, ThreeTermProblem>;

Problem build(const EquationSpec& eq, const Settings& s, std::ostream& err) {
    const InitialData data = initial_of(s);
    return std::visit(overloaded{
                          [&](const family::ShiftScale& f) -> Problem { return make_problem(f.b, data); },
                          [&](const family::PureScale& f) -> Problem { return make_scale_problem(f.b, data); },
                          [&](const family::EvenParity&) -> Problem {
                              auto p = make_parity_problem(Parity::even, parity_domain_of(s), data);
                              if (p.report().warning) err << "warning: " << *p.report().warning << "\n";
                              return p;
                          },
                          [&](const family::OddParity&) -> Problem {
                              auto p = make_parity_problem(Parity::odd, parity_domain_of(s), data);
                              if (p.report().warning) err << "warning: " << *p.report().warning << "\n";
                              return p;
                          },
                          [&](const family::ThreeTerm&) -> Problem { return make_three_term_problem(data); },
                      },
                      eq);
}

std::function<double(double)> evaluator(const Problem& p) {
    return std::visit(overloaded{
                          [](const ParityProblem& q) -> std::function<double(double)> {
                              return [&q](double x) { return q.extend(x); };
                          },
                          [](const auto& q) -> std::function<double(double)> {
                              return [&q](double x) { return q.evaluate(x); };
                          },
                      },
                      p);
}

void cmd_eval(const Settings& s, const std::vector<std::string>& queries, std::ostream& out, std::ostream& err) {
    std::vector<double> xs;
    for (const auto& q : queries) xs.push_back(number(q, "query"));
    if (xs.empty() && s.x) xs.push_back(number(*s.x, "--x"));
    if (xs.empty()) throw UsageError("eval needs at least one query point");
    const EquationSpec eq = equation_of(s);
    const Problem p = build(eq, s, err);
    const auto y = evaluator(p);
    std::ostringstream buf;
    buf << "x,y\n";
    for (double x : xs) buf << format_real(x) << ',' << format_real(y(x)) << '\n';
    out << buf.str();
}

void cmd_classify(const Settings& s, std::ostream& out) {
    const EquationSpec eq = equation_of(s);
    if (!s.init_set) throw UsageError("classify needs --init-set with a single interval");
    const IntervalUnion set = parse_interval_union(*s.init_set);
    if (set.size() != 1) throw UsageError("classify needs a single interval, got " + to_string(set));
    const Classification c = classify(eq, set[0]);
    if (const auto* v = std::get_if<verdict::LimitPointViolation>(&c)) throw PenlpViolation(v->limit_point);
    out << describe(c) << '\n';
}

void cmd_trace(const Settings& s, const std::optional<std::string>& xpos, std::ostream& out, std::ostream& err) {
    const std::optional<std::string> xt = xpos ? xpos : s.x;
    const double x = required_number(xt, "trace point");
    const EquationSpec eq = equation_of(s);
    if (!std::holds_alternative<family::ShiftScale>(eq))
        throw UsageError("trace is defined for the periodic and shift-scale equations");
    const Problem p = build(eq, s, err);
    const IterationTrace t = std::get<ShiftScaleProblem>(p).trace(x);
    std::ostringstream buf;
    buf << "n,x_n,side\n";
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        const double v = t.points[i];
        std::string side = "none";
        if (t.center) side = v > *t.center ? "above" : v < *t.center ? "below" : "on";
        buf << i << ',' << format_real(v) << ',' << side << '\n';
    }
    out << buf.str();
}

void cmd_sweep(const Settings& s, std::ostream& out, std::ostream& err) {
    const double from = required_number(s.from, "--from");
    const double to = required_number(s.to, "--to");
    const double step = required_number(s.step, "--step");
    const double tol = s.tol ? number(*s.tol, "--tol") : 1e-9;
    if (!(step > 0) || !(to >= from)) throw UsageError("sweep needs --step > 0 and --to >= --from");
    const double count = std::floor((to - from) / step + 1e-9) + 1;
    if (count > 1e6) throw UsageError("sweep grid has more than 10^6 points");
    std::vector<double> grid;
    for (long i = 0; i < static_cast<long>(count); ++i) grid.push_back(from + static_cast<double>(i) * step);

    const EquationSpec eq = equation_of(s);
    const Problem p = build(eq, s, err);
    const auto y = evaluator(p);
    std::ostringstream buf;
    buf << "x,y\n";
    for (double x : grid) buf << format_real(x) << ',' << format_real(y(x)) << '\n';
    const oracle::ResidualReport r = oracle::residual_sweep(y, eq, grid, tol);
    buf << "# residual," << format_real(r.max_abs_residual) << '\n';
    out << buf.str();
}

void cmd_limit_points(const Settings& s, std::ostream& out) {
    const EquationSpec eq = equation_of(s);
    check_parameters(eq);
    std::ostringstream buf;
    buf << "limit_point\n";
    for (double l : limit_points(eq)) buf << format_real(l) << '\n';
    out << buf.str();
}

void cmd_witness(const Settings& s, std::ostream& out) {
    const EquationSpec eq = equation_of(s);
    check_parameters(eq);
    const double x = required_number(s.x, "--x");
    const std::vector<int> depths = depth_list(s.depths.value_or("1,2"));
    const double tol = s.tol ? number(*s.tol, "--tol") : 1e-9;
    const InitialData data = initial_of(s);
    if (!s.unsafe) {
        if (auto check = validate_initial_set(eq, data.set()); !check.ok()) throw PenlpViolation(*check.violated);
    }
    const WitnessReport r = constraint_witness(eq, [&data](double t) { return data(t); }, x, depths, tol);
    std::ostringstream buf;
    buf << "depth,value\n";
    for (const auto& c : r.candidates) buf << c.depth << ',' << format_real(c.value) << '\n';
    if (r.consistent()) {
        buf << "verdict,CONSISTENT\n";
    } else {
        buf << "verdict,INCONSISTENT," << r.candidates[r.conflict->first].depth << ','
            << r.candidates[r.conflict->second].depth << '\n';
    }
    out << buf.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Initial value problems for shift, scale, parity and three-term functional equations", "feq"};
    app.require_subcommand(1);
    app.fallthrough();

    Settings flags;
    std::optional<std::string> config;
    app.add_option("--equation", flags.equation, "periodic|shift-scale|scale|even|odd|three-term");
    app.add_option("--b", flags.b, "equation parameter b");
    app.add_option("--init-set", flags.init_set, "initial set, e.g. \"(-1,-0.5]u[0.5,1)\"");
    app.add_option("--init-fn", flags.init_fn, "initial function of x; repeatable, paired with --init-on")
        ->allow_extra_args(false);
    app.add_option("--init-on", flags.init_on, "interval carrying the matching --init-fn")->allow_extra_args(false);
    app.add_option("--config", config, "key=value file; command-line flags take precedence");
    app.add_option("--tol", flags.tol, "consistency / residual tolerance (default 1e-9)");
    app.add_option("--domain", flags.domain, "parity domain: R or (-a,a)");
    app.add_flag("--unsafe", flags.unsafe, "witness: skip the limit-point gate");

    auto* eval = app.add_subcommand("eval", "evaluate the extension; CSV x,y");
    std::vector<std::string> queries;
    eval->add_option("queries", queries, "query points");
    eval->add_option("--x", flags.x, "query point");

    app.add_subcommand("classify", "well-posedness of data on one interval");

    auto* trace = app.add_subcommand("trace", "iterates from x into the initial set; CSV n,x_n,side");
    std::optional<std::string> trace_x;
    trace->add_option("x", trace_x, "query point");

    auto* sweep = app.add_subcommand("sweep", "evaluate on a grid and report the equation residual");
    sweep->add_option("--from", flags.from);
    sweep->add_option("--to", flags.to);
    sweep->add_option("--step", flags.step);

    app.add_subcommand("limit-points", "limit points of the equation");

    auto* witness = app.add_subcommand("witness", "values of y(x) at several iteration depths");
    witness->add_option("--x", flags.x, "query point");
    witness->add_option("--depths", flags.depths, "comma-separated depths (default 1,2)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return usage;
    }

    try {
        const Settings s = config ? merge(flags, read_config(*config)) : flags;
        if (eval->parsed()) {
            cmd_eval(s, queries, out, err);
        } else if (app.got_subcommand("classify")) {
            cmd_classify(s, out);
        } else if (trace->parsed()) {
            cmd_trace(s, trace_x, out, err);
        } else if (sweep->parsed()) {
            cmd_sweep(s, out, err);
        } else if (app.got_subcommand("limit-points")) {
            cmd_limit_points(s, out);
        } else if (witness->parsed()) {
            cmd_witness(s, out);
        }
        return ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return parse;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return validation;
    } catch (const OutOfDomainError& e) {
        err << "out of domain: " << e.what() << "\n";
        return out_of_domain;
    } catch (const DomainError& e) {
        err << "out of domain: " << e.what() << "\n";
        return out_of_domain;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return internal;
    }
}

}  // namespace feq::cli
