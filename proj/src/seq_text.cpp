#include "hyperseq/seq_text.hpp"

#include <cctype>

namespace hyperseq {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!try_consume(c)) fail(std::string("expected '") + c + "'");
    }

    bool try_keyword(std::string_view kw) {
        skip_ws();
        if (text_.substr(pos_, kw.size()) != kw) return false;
        std::size_t after = pos_ + kw.size();
        if (after < text_.size() && std::isalnum(static_cast<unsigned char>(text_[after]))) return false;
        pos_ = after;
        return true;
    }

    Rational rational() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        auto r = try_parse_rational(text_.substr(start, pos_ - start));
        if (!r) fail("expected rational literal", start);
        return *r;
    }

    Integer positive_int() {
        Rational r = rational();
        if (!is_integer(r) || r < 1) fail("expected positive integer");
        return numerator(r);
    }

    [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) {
        throw SeqParseError(what + " at position " + std::to_string(at), at);
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<Rational> coeff_list(Cursor& c, char terminator) {
    std::vector<Rational> out;
    out.push_back(c.rational());
    while (c.try_consume(',')) out.push_back(c.rational());
    c.expect(terminator);
    return out;
}

RationalFunc parse_ratfun_body(Cursor& c) {
    c.expect('(');
    std::vector<Rational> num = coeff_list(c, ';');
    std::vector<Rational> den = coeff_list(c, ')');
    Polynomial denPoly{std::move(den)};
    if (denPoly.is_zero()) throw ZeroDenominatorPolynomial();
    return RationalFunc(Polynomial{std::move(num)}, std::move(denPoly));
}

RationalFunc parse_branch(Cursor& c) {
    if (c.try_keyword("ratfun")) return parse_ratfun_body(c);
    return RationalFunc::constant(c.rational());
}

EventualSeq parse_seq_inner(Cursor& c) {
    if (c.try_keyword("patch")) {
        c.expect('(');
        EventualSeq base = parse_seq_inner(c);
        c.expect(';');
        EventualSeq::PatchMap patches;
        do {
            Integer i = c.positive_int();
            c.expect('=');
            patches[i] = c.rational();
        } while (c.try_consume(','));
        c.expect(')');
        return base.with_patches(patches);
    }
    if (c.try_keyword("masked")) {
        c.expect('(');
        Integer m = c.positive_int();
        if (m > 1024) c.fail("modulus too large");
        c.expect(';');
        std::vector<RationalFunc> branches;
        branches.push_back(parse_branch(c));
        while (c.try_consume('|')) branches.push_back(parse_branch(c));
        c.expect(')');
        if (branches.size() != static_cast<std::size_t>(m)) throw BranchCountMismatch();
        return EventualSeq::masked(static_cast<unsigned>(m), std::move(branches));
    }
    if (c.try_keyword("ratfun")) return EventualSeq::from_ratfun(parse_ratfun_body(c));
    if (c.try_keyword("const")) return EventualSeq::constant(c.rational());
    c.fail("expected ratfun, masked, patch, or const");
}

std::string coeffs_to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ",";
        out += format_rational(p.coeffs()[i]);
    }
    return out;
}

} // namespace

EventualSeq parse_seq(std::string_view text) {
    Cursor c(text);
    EventualSeq s = parse_seq_inner(c);
    if (!c.at_end()) c.fail("trailing input");
    return s;
}

std::string print_ratfun(const RationalFunc& f) {
    if (f.is_constant()) {
        auto v = f.eval(Rational(0));
        return format_rational(v ? *v : Rational(0));
    }
    return "ratfun(" + coeffs_to_string(f.num()) + "; " + coeffs_to_string(f.den()) + ")";
}

std::string print_seq(const EventualSeq& s) {
    std::string core;
    if (s.modulus() == 1) {
        const RationalFunc& f = s.branches().front();
        if (f.is_constant()) {
            auto v = f.eval(Rational(0));
            core = "const " + format_rational(v ? *v : Rational(0));
        } else {
            core = "ratfun(" + coeffs_to_string(f.num()) + "; " + coeffs_to_string(f.den()) + ")";
        }
    } else {
        core = "masked(" + std::to_string(s.modulus()) + "; ";
        for (unsigned r = 0; r < s.modulus(); ++r) {
            if (r) core += " | ";
            core += print_ratfun(s.branches()[r]);
        }
        core += ")";
    }
    if (s.patches().empty()) return core;
    std::string out = "patch(" + core + "; ";
    bool first = true;
    for (const auto& [k, v] : s.patches()) {
        if (!first) out += ", ";
        first = false;
        out += k.str() + "=" + format_rational(v);
    }
    return out + ")";
}

} // namespace hyperseq
