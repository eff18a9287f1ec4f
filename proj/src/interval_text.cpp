#include <cctype>
#include <string>

#include "feq/errors.hpp"
#include "feq/expr.hpp"
#include "feq/interval.hpp"

namespace feq {

namespace {

class IntervalReader {
public:
    explicit IntervalReader(std::string_view text) : text_(text) {}

    IntervalUnion read_union() {
        std::vector<Interval> parts;
        parts.push_back(read_one());
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) break;
            if (text_[pos_] != 'u' && text_[pos_] != 'U')
                throw IntervalSyntaxError("expected 'u' or end of input at position " + std::to_string(pos_),
                                          pos_);
            ++pos_;
            parts.push_back(read_one());
        }
        return IntervalUnion::normalize(std::move(parts));
    }

    Interval read_single() {
        Interval iv = read_one();
        skip_ws();
        if (pos_ != text_.size())
            throw IntervalSyntaxError("trailing text after interval at position " + std::to_string(pos_), pos_);
        return iv;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    Interval read_one() {
        skip_ws();
        if (pos_ >= text_.size() || (text_[pos_] != '[' && text_[pos_] != '('))
            throw IntervalSyntaxError("expected '[' or '(' at position " + std::to_string(pos_), pos_);
        const bool lo_closed = text_[pos_] == '[';
        ++pos_;
        const double lo = read_endpoint(",");
        ++pos_;
        const double hi = read_endpoint(")]");
        const bool hi_closed = text_[pos_] == ']';
        ++pos_;
        if (!(lo < hi || (lo == hi && lo_closed && hi_closed)))
            throw IntervalSyntaxError("empty interval ending at position " + std::to_string(pos_), pos_);
        return Interval{lo, hi, lo_closed, hi_closed};
    }

    // Reads a constant expression up to a depth-0 terminator in `stops`.
    double read_endpoint(std::string_view stops) {
        const std::size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (depth == 0 && stops.find(c) != std::string_view::npos) break;
            if (c == '(') ++depth;
            if (c == ')') --depth;
            ++pos_;
        }
        if (pos_ >= text_.size())
            throw IntervalSyntaxError("unterminated interval, expected one of \"" + std::string(stops) + "\"",
                                      pos_);
        const std::string_view body = text_.substr(start, pos_ - start);
        Expr e = [&] {
            try {
                return parse_expr(body);
            } catch (const ParseError& err) {
                throw IntervalSyntaxError("bad endpoint '" + std::string(body) + "': " + err.what(),
                                          start + err.position());
            }
        }();
        if (e.depends_on_x())
            throw IntervalSyntaxError("endpoint '" + std::string(body) + "' must be constant", start);
        try {
            return e.eval(0.0);
        } catch (const DomainError& err) {
            throw IntervalSyntaxError("endpoint '" + std::string(body) + "': " + err.what(), start);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IntervalUnion parse_interval_union(std::string_view text) { return IntervalReader{text}.read_union(); }

Interval parse_interval(std::string_view text) { return IntervalReader{text}.read_single(); }

}  // namespace feq
