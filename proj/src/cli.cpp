#include "hyperseq/cli.hpp"

#include "hyperseq/calculus.hpp"
#include "hyperseq/seq_text.hpp"
#include "hyperseq/shadow.hpp"
#include "hyperseq/ultralab.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace hyperseq::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

struct Options {
    std::string verb;
    std::map<std::string, std::string> flags;
    bool trace = false;
    bool jsonFormat = false;
    std::vector<std::string> positional;
};

Options parse_options(const std::vector<std::string>& args) {
    Options o;
    if (args.empty()) throw UsageError("missing command verb");
    o.verb = args[0];
    for (std::size_t i = 1; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--trace") {
            o.trace = true;
        } else if (a == "--format") {
            if (++i >= args.size()) throw UsageError("--format needs a value");
            if (args[i] == "json")
                o.jsonFormat = true;
            else if (args[i] != "text")
                throw UsageError("--format must be json or text");
        } else if (a.rfind("--", 0) == 0) {
            if (++i >= args.size()) throw UsageError(a + " needs a value");
            o.flags[a.substr(2)] = args[i];
        } else {
            o.positional.push_back(a);
        }
    }
    return o;
}

const std::string& need(const Options& o, const std::string& flag) {
    auto it = o.flags.find(flag);
    if (it == o.flags.end()) throw UsageError(o.verb + " requires --" + flag);
    return it->second;
}

Rational need_rational(const Options& o, const std::string& flag) {
    return parse_rational(need(o, flag));
}

std::string caret_diagnostic(const std::string& source, std::size_t pos, const std::string& expected) {
    std::string out = "  " + source + "\n  ";
    for (std::size_t i = 0; i < pos && i < source.size() + 1; ++i) out += ' ';
    out += "^\n";
    if (!expected.empty()) out += "expected: " + expected + "\n";
    return out;
}

ExprPtr parse_expr_arg(const std::string& text) {
    return hyperseq::parse_expr(text); // ExprError maps to exit 2 in the dispatcher
}

json shadow_json(const ShadowResult& r) {
    json j;
    switch (r.verdict) {
        case ShadowVerdict::Exact:
            j["verdict"] = "exact";
            j["value"] = format_rational(r.value);
            break;
        case ShadowVerdict::Enclosure:
            j["verdict"] = "enclosure";
            j["lo"] = format_rational(r.lo);
            j["hi"] = format_rational(r.hi);
            break;
        case ShadowVerdict::Divergent: j["verdict"] = "divergent"; break;
        case ShadowVerdict::NotCauchy: j["verdict"] = "not-cauchy"; break;
    }
    return j;
}

void emit(const Options& o, std::ostream& out, const std::string& text, const json& j) {
    if (o.jsonFormat)
        out << j.dump() << "\n";
    else
        out << text << "\n";
}

void cmd_eval(const Options& o, std::ostream& out) {
    if (o.flags.count("seq")) {
        EventualSeq s = parse_seq(need(o, "seq"));
        Rational nq = need_rational(o, "at");
        if (!is_integer(nq) || numerator(nq) < s.start_index())
            throw UsageError("--at must be an integer index >= " + s.start_index().str());
        Rational v = s.eval_at(numerator(nq));
        emit(o, out, format_rational(v), json{{"value", format_rational(v)}});
        return;
    }
    ExprPtr f = parse_expr_arg(need(o, "expr"));
    Rational x = need_rational(o, "at");
    auto v = f->canonical().eval(x);
    if (!v) throw PoleAtPoint();
    emit(o, out, format_rational(*v), json{{"value", format_rational(*v)}});
}

void cmd_compare(const Options& o, std::ostream& out) {
    HyperNum a(parse_seq(need(o, "a")));
    HyperNum b(parse_seq(need(o, "b")));
    Ordering r = compare(a, b);
    emit(o, out, to_string(r), json{{"ordering", to_string(r)}});
}

void cmd_classify(const Options& o, std::ostream& out) {
    EventualSeq s = parse_seq(need(o, "seq"));
    Classification c = classify(s);
    if (o.trace)
        for (std::size_t r = 0; r < c.branchLimits.size(); ++r) {
            const BranchLimit& bl = c.branchLimits[r];
            out << "branch " << r << ": "
                << (bl.kind == LimitKind::Finite     ? "limit " + format_rational(bl.value)
                    : bl.kind == LimitKind::PlusInfinity ? std::string("limit +inf")
                                                         : std::string("limit -inf"))
                << "\n";
        }
    emit(o, out, to_string(c.tag), json{{"class", to_string(c.tag)}});
}

void cmd_shadow(const Options& o, std::ostream& out, bool keyValueForm) {
    ShadowResult r;
    if (o.flags.count("lo") || o.flags.count("hi")) {
        EventualSeq s = parse_seq(need(o, "seq"));
        Rational lo = need_rational(o, "lo");
        Rational hi = need_rational(o, "hi");
        Rational tol = o.flags.count("tol") ? need_rational(o, "tol") : Rational(1, 1024);
        Integer start = s.start_index();
        r = bisection_shadow(
            [&s, &start](const Integer& n) { return s.eval_at(std::max(n, start)); }, lo, hi, tol);
    } else {
        r = shadow_exact(parse_seq(need(o, "seq")));
    }
    emit(o, out, keyValueForm ? r.to_key_value() : r.to_text(), shadow_json(r));
}

void cmd_deriv(const Options& o, std::ostream& out) {
    ExprPtr f = parse_expr_arg(need(o, "expr"));
    Rational x0 = need_rational(o, "at");
    DerivativeDetail d = derivative_detail(f, x0);
    if (o.trace) {
        out << "expr: " << print_expr(f) << "\n";
        out << "point: " << format_rational(x0) << "\n";
        out << "quotient: " << print_seq(d.quotient) << "\n";
        out << "shadow: " << format_rational(d.value) << "\n";
    }
    emit(o, out, format_rational(d.value), json{{"derivative", format_rational(d.value)}});
}

void cmd_integrate(const Options& o, std::ostream& out) {
    ExprPtr f = parse_expr_arg(need(o, "expr"));
    Rational a = need_rational(o, "from");
    Rational b = need_rational(o, "to");
    if (o.flags.count("tol") && !f->is_polynomial()) {
        ShadowResult r = numeric_shadow(f, a, b, need_rational(o, "tol"));
        emit(o, out, r.to_text(), shadow_json(r));
        return;
    }
    IntegralDetail d = integral_detail(f, a, b);
    if (o.trace) {
        out << "expr: " << print_expr(f) << "\n";
        out << "interval: [" << format_rational(a) << ", " << format_rational(b) << "]\n";
        out << "riemann-sum: " << print_ratfun(d.riemannSum) << "\n";
        out << "shadow: " << format_rational(d.value) << "\n";
    }
    emit(o, out, format_rational(d.value), json{{"integral", format_rational(d.value)}});
}

void cmd_demo(const Options& o, std::ostream& out) {
    if (o.positional.empty() || o.positional[0] != "ppoint")
        throw UsageError("demo supports: demo ppoint --scene <file>");
    std::ifstream in(need(o, "scene"));
    if (!in) throw UsageError("cannot open scene file " + need(o, "scene"));
    FilterScene scene = FilterScene::parse(in);

    json j;
    if (!scene.chain.empty()) {
        SeqTable f = build_diagonal_sequence(scene);
        out << "diagonal sequence:\n";
        for (const auto& [i, v] : f) {
            out << "  f(" << i << ") = " << format_rational(v) << "\n";
            j["diagonal"][std::to_string(i)] = format_rational(v);
        }
        for (std::size_t n = 0; n + 2 < scene.chain.size(); ++n) {
            // oscillation over a stratum pair, the finite shadow of "not Cauchy on Y"
            IndexSet y;
            for (unsigned i : scene.chain[n]) y.insert(i);
            Rational osc = oscillation_on(f, y, 1);
            out << "oscillation on X" << n + 1 << ": " << format_rational(osc) << "\n";
            j["oscillation"]["X" + std::to_string(n + 1)] = format_rational(osc);
        }
    }
    if (!scene.partition.empty()) {
        IndexSet greedy = greedy_pseudo_intersection(scene);
        out << "greedy pseudo-intersection: {";
        bool first = true;
        for (unsigned i : greedy) {
            if (!first) out << ", ";
            first = false;
            out << i;
        }
        out << "}\n";
        bool ok = check_pseudo_intersection(scene, greedy, 1);
        out << "check (bound 1): " << (ok ? "pass" : "fail") << "\n";
        j["pseudo_intersection"] = std::vector<unsigned>(greedy.begin(), greedy.end());
        j["check_bound_1"] = ok;
    }
    if (o.jsonFormat) out << j.dump() << "\n";
}

std::vector<std::string> split_command_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool inQuote = false;
    char quote = 0;
    for (char c : line) {
        if (inQuote) {
            if (c == quote)
                inQuote = false;
            else
                cur += c;
        } else if (c == '"' || c == '\'') {
            inQuote = true;
            quote = c;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err, std::istream* batchInput,
             bool inBatch);

int run_batch(const Options& o, std::ostream& out, std::ostream& err, std::istream& in) {
    int worst = 0;
    std::string line;
    while (std::getline(in, line)) {
        auto args = split_command_line(line);
        if (args.empty()) continue;
        Options sub;
        try {
            sub = parse_options(args);
            sub.jsonFormat = sub.jsonFormat || o.jsonFormat;
            int rc = dispatch(sub, out, err, nullptr, true);
            worst = std::max(worst, rc);
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            worst = std::max(worst, 2);
        }
    }
    return worst;
}

int dispatch(const Options& o, std::ostream& out, std::ostream& err, std::istream* batchInput,
             bool inBatch) {
    try {
        if (o.verb == "eval")
            cmd_eval(o, out);
        else if (o.verb == "compare")
            cmd_compare(o, out);
        else if (o.verb == "classify")
            cmd_classify(o, out);
        else if (o.verb == "shadow")
            cmd_shadow(o, out, inBatch);
        else if (o.verb == "deriv")
            cmd_deriv(o, out);
        else if (o.verb == "integrate")
            cmd_integrate(o, out);
        else if (o.verb == "demo")
            cmd_demo(o, out);
        else if (o.verb == "batch" && !inBatch)
            return run_batch(o, out, err, batchInput ? *batchInput : std::cin);
        else if (o.verb == "help" || o.verb == "--help") {
            out << usage();
        } else {
            throw UsageError("unknown verb '" + o.verb + "'");
        }
        return 0;
    } catch (const SyntaxError& e) {
        err << "error: " << e.what() << " at position " << e.position << "\n";
        if (o.flags.count("expr")) err << caret_diagnostic(o.flags.at("expr"), e.position, e.expected);
        err << "grammar: expr := term (('+'|'-') term)* ; term := factor (('*'|'/') factor)* ; "
               "factor := base ('^' nonneg-int)? ; base := rational | variable | '(' expr ')'\n";
        return 2;
    } catch (const ExprError& e) {
        err << "error: " << e.what() << " at position " << e.position << "\n";
        if (o.flags.count("expr")) err << caret_diagnostic(o.flags.at("expr"), e.position, "");
        return 2;
    } catch (const SeqParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << usage();
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

std::string usage() {
    return "usage:\n"
           "  eval      --seq <literal> --at <n>        exact value at an index\n"
           "  eval      --expr <e> --at <p/q>           exact value of an expression\n"
           "  compare   --a <literal> --b <literal>     eventual order: LT/EQ/GT/INCOMPARABLE\n"
           "  classify  --seq <literal>                 growth class of a sequence\n"
           "  shadow    --seq <literal>                 exact standard part / verdict\n"
           "  shadow    --seq <literal> --lo <q> --hi <q> [--tol <q>]   bisection enclosure\n"
           "  deriv     --expr <e> --at <p/q>           derivative via difference-quotient shadow\n"
           "  integrate --expr <e> --from <p/q> --to <p/q> [--tol <q>]  exact or numeric integral\n"
           "  demo ppoint --scene <file>                finite filter-combinatorics demo\n"
           "  batch                                     one command per stdin line\n"
           "flags: --trace (step-by-step), --format json|text\n"
           "sequence literals: ratfun(num; den) | masked(m; f0 | f1 | ...) | "
           "patch(s; i=v, ...) | const q\n";
}

CliResult run(const std::vector<std::string>& args, std::istream* batchInput) {
    CliResult r;
    std::ostringstream out, err;
    Options o;
    try {
        o = parse_options(args);
    } catch (const std::exception& e) {
        r.status = 2;
        r.err = std::string("error: ") + e.what() + "\n" + usage();
        return r;
    }
    r.status = dispatch(o, out, err, batchInput, false);
    r.out = out.str();
    r.err = err.str();
    return r;
}

} // namespace hyperseq::cli
