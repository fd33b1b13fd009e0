// Command-line front end.  Builds the algebras, round-trips them through the
// JSON format, and exposes the verification passes (automorphism sweeps,
// simplicity certificates, line stabilizers, trace forms) to shell scripts.
//
// Exit codes: 0 verified/ok, 1 property violation (report carries a witness),
// 2 usage error, 3 inconclusive (budget exhausted or certificate failed).

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "autalg/autgroup.hpp"
#include "autalg/constructions.hpp"
#include "autalg/serialize.hpp"
#include "autalg/simplicity.hpp"

namespace {

using namespace autalg;

int exit_code_for(const std::string& code) {
    static const std::set<std::string> usage = {
        "SchemaViolation",  "FieldTooSmall", "MissingModulus", "NonPrimeCharacteristic",
        "ReducibleModulus", "InvalidPermutation", "GroupTooLarge", "BadEigenvalues",
        "BadLambda",        "ZeroLambda",    "BadScalars",     "DimensionMismatch",
        "FieldMismatch",    "TrivialGroup",  "DivisionByZero", "UsageError"};
    static const std::set<std::string> inconclusive = {"BudgetExceeded", "TooLargeForExhaustive"};
    if (usage.count(code)) return 2;
    if (inconclusive.count(code)) return 3;
    return 1;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail("UsageError", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail("UsageError", "cannot open '" + path + "' for writing");
    f << text;
}

// --json prints the report on stdout; --out writes the payload (the algebra
// document for realize/construct, otherwise the report itself) to a file.
struct Io {
    bool json = false;
    std::string out;
};

void add_io(CLI::App* cmd, Io& io) {
    cmd->add_flag("--json", io.json, "print the JSON report on stdout");
    cmd->add_option("--out", io.out, "write the JSON payload to this file");
}

void emit(const Io& io, const json& report, const std::string& text, const json* payload = nullptr) {
    if (!io.out.empty()) write_file(io.out, (payload ? *payload : report).dump(2) + "\n");
    if (io.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << text;
}

std::size_t default_workers() {
    const char* env = std::getenv("AUTALG_WORKERS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    return (end && *end == '\0' && v > 0) ? static_cast<std::size_t>(v) : 1;
}

// "p", "p,k" (canonical modulus), or "p,k,c0,c1,...,ck"
FieldSpec field_arg(const std::string& raw) {
    std::vector<std::uint64_t> nums;
    std::size_t at = 0;
    while (at <= raw.size()) {
        std::size_t comma = raw.find(',', at);
        std::string tok =
            comma == std::string::npos ? raw.substr(at) : raw.substr(at, comma - at);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            fail("UsageError", "--field expects p[,k[,c0,c1,...]] with decimal entries, got '" +
                                   raw + "'");
        nums.push_back(std::stoull(tok));
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    if (nums.size() == 1) return field_make(nums[0]);
    unsigned k = static_cast<unsigned>(nums[1]);
    if (nums.size() == 2) {
        if (k <= 1) return field_make(nums[0], k);
        return field_make(nums[0], k, canonical_modulus(nums[0], k));
    }
    return field_make(nums[0], k, std::vector<std::uint64_t>(nums.begin() + 2, nums.end()));
}

// comma split that leaves extension-field literals "[a,b]" intact
std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
            continue;
        }
        if (ch == ' ' && cur.empty()) continue;
        cur += ch;
    }
    out.push_back(cur);
    return out;
}

template <class F>
std::vector<typename F::elem> parse_list(const F& K, const std::string& csv) {
    std::vector<typename F::elem> out;
    for (const auto& tok : split_csv(csv)) out.push_back(K.parse(tok));
    return out;
}

template <class F>
json mat_json(const F& K, const Mat<F>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(K.to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class F>
std::string span_text(const Algebra<F>& A, const Subspace<F>& S) {
    std::string out = "span{";
    for (std::size_t r = 0; r < S.basis.rows; ++r) {
        if (r) out += ", ";
        bool first = true;
        for (std::size_t c = 0; c < S.basis.cols; ++c) {
            const auto& v = S.basis.at(r, c);
            if (A.K.is_zero(v)) continue;
            if (!first) out += " + ";
            if (!A.K.eq(v, A.K.one())) out += A.K.to_string(v) + "*";
            out += A.basis[c];
            first = false;
        }
        if (first) out += "0";
    }
    return out + "}";
}

template <class F>
std::string summary_text(const Algebra<F>& A) {
    std::ostringstream t;
    t << A.construction << ": dim " << A.dim() << " over " << spec_to_string(spec_of(A.K))
      << "\n";
    for (const auto& b : A.blocks) {
        t << "  " << b.name << " [" << b.lo << "," << b.hi << ") " << b.role;
        if (!b.linked_to.empty()) t << " -> " << b.linked_to;
        t << "\n";
    }
    return t.str();
}

AnyAlgebra load_algebra(const std::string& path) { return algebra_from_string(read_file(path)); }

// ---------------------------------------------------------------- realize --

struct RealizeArgs {
    std::string group, field, params;
    std::uint64_t budget = 500000000;
    std::size_t workers = default_workers();
    Io io;
};

RealizeOptions params_file(const std::string& path) {
    RealizeOptions opt;
    if (path.empty()) return opt;
    json j = json::parse(read_file(path), nullptr, false);
    if (j.is_discarded() || !j.is_object())
        fail("UsageError", "--params file is not a JSON object");
    for (const auto& [key, val] : j.items()) {
        if (key == "lambda" || key == "mu") {
            if (!val.is_array()) fail("UsageError", "--params '" + key + "' must be an array");
            auto& dst = key == "lambda" ? opt.lambda : opt.mu;
            for (const auto& e : val) {
                if (!e.is_string())
                    fail("UsageError", "--params '" + key + "' entries must be strings");
                dst.push_back(e.get<std::string>());
            }
        } else if (key == "alpha" || key == "zeta") {
            if (!val.is_string()) fail("UsageError", "--params '" + key + "' must be a string");
            (key == "alpha" ? opt.alpha : opt.zeta) = val.get<std::string>();
        } else {
            fail("UsageError", "--params has unexpected key '" + key + "'");
        }
    }
    return opt;
}

int run_realize(const RealizeArgs& a) {
    FieldSpec fs = field_arg(a.field);
    PermGroup G = parse_group(a.group);
    RealizeOptions opt = params_file(a.params);
    return with_field(fs, [&](const auto& K) -> int {
        using F = std::decay_t<decltype(K)>;
        ConstructionReport<F> rep = realize_finite_group(K, G, opt);
        const Algebra<F>& A = rep.algebra;

        EnumerationOptions<F> eo;
        eo.workers = a.workers;
        if (G.order() > 1) {
            // the sweep over the first graded layer can be cut down by the
            // line the construction is built around
            std::vector<typename F::elem> lam;
            if (!opt.lambda.empty())
                for (const auto& s : opt.lambda) lam.push_back(K.parse(s));
            else
                lam = realize_lambda(K, G);
            eo.hint = typename EnumerationOptions<F>::LineHint{
                "R.A.deg1", GradedFlavor::Symmetric, G.order(), invariant_f(K, G, lam)};
        }

        json report;
        report["group"] = a.group;
        report["field"] = field_to_json(fs);
        report["dim"] = A.dim();
        json checks = json::array();
        for (const auto& c : rep.checks) {
            json jc;
            jc["claim"] = c.claim;
            jc["passed"] = c.passed;
            if (!c.witness.empty()) jc["witness"] = c.witness;
            checks.push_back(std::move(jc));
        }
        report["checks"] = std::move(checks);
        report["expected_order"] = G.order();

        int rc = rep.all_passed() ? 0 : 1;
        std::uint64_t order = 0;
        bool counted = false;
        try {
            GenerationPlan<F> plan = generation_plan(A);
            AutomorphismSet<F> auts = enumerate_automorphisms(A, plan, a.budget, eo);
            order = auts.order;
            counted = true;
            report["aut_order"] = order;
            if (order != G.order()) rc = 1;
        } catch (const Error& e) {
            if (e.code() != "BudgetExceeded") throw;
            report["note"] = e.what();
            rc = 3;
        }
        report["simple"] = false;
        for (const auto& c : rep.checks)
            if (c.claim.find("ideal") != std::string::npos) report["simple"] = c.passed;

        std::ostringstream text;
        text << "realized group of order " << G.order() << " as the automorphism group of a "
             << A.dim() << "-dimensional algebra over " << spec_to_string(fs) << "\n";
        std::size_t passed = 0;
        for (const auto& c : rep.checks) passed += c.passed ? 1 : 0;
        text << "checks: " << passed << "/" << rep.checks.size() << " passed\n";
        if (counted)
            text << "automorphisms found: " << order << " (expected " << G.order() << ")\n";
        else
            text << "automorphism sweep skipped: " << report["note"].get<std::string>() << "\n";
        json payload = algebra_to_json(A);
        emit(a.io, report, text.str(), &payload);
        return rc;
    });
}

// -------------------------------------------------------------- construct --

struct ConstructArgs {
    std::string kind, field = "5";
    std::size_t s = 2, n = 2, vars = 2, degree = 2;
    std::string flavor = "tensor", marked, gamma, delta, group, lambda, mu;
    std::string algebra, alpha, zeta, variant = "standard";
    Io io;
};

template <class F>
Subspace<F> marked_lines(const F& K, GradedFlavor flavor, std::size_t nvars, std::size_t degree,
                         const std::string& csv) {
    GradedLayer top = monomial_layer(flavor, nvars, degree);
    std::vector<Vec<F>> rows;
    if (!csv.empty())
        for (const auto& tok : split_csv(csv)) {
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                fail("UsageError", "--marked expects comma-separated monomial indices");
            std::size_t idx = std::stoull(tok);
            if (idx >= top.dim())
                fail("UsageError", "--marked index " + tok + " out of range, top layer has " +
                                       std::to_string(top.dim()) + " monomials");
            Vec<F> row(top.dim(), K.zero());
            row[idx] = K.one();
            rows.push_back(std::move(row));
        }
    return subspace_from_rows(K, top.dim(), rows);
}

template <class F>
Algebra<F> build_kind(const F& K, const ConstructArgs& a) {
    if (a.kind == "rigid") return rigid_algebra(K, a.s);
    if (a.kind == "B") return exterior_b(K, a.n);
    if (a.kind == "A") {
        GradedFlavor fl = a.flavor == "symmetric" ? GradedFlavor::Symmetric : GradedFlavor::Tensor;
        if (a.flavor != "symmetric" && a.flavor != "tensor")
            fail("UsageError", "--flavor must be tensor or symmetric");
        std::vector<std::string> names;
        for (std::size_t i = 1; i <= a.vars; ++i) names.push_back("v" + std::to_string(i));
        Subspace<F> S = marked_lines(K, fl, a.vars, a.degree, a.marked);
        Algebra<F> A = build_graded_nilpotent(K, fl, names, a.degree, S).alg;
        if (A.construction.empty()) {
            A.construction = "graded";
            A.params = {{"flavor", a.flavor},
                        {"vars", std::to_string(a.vars)},
                        {"degree", std::to_string(a.degree)},
                        {"marked", a.marked}};
        }
        return A;
    }
    if (a.kind == "C") {
        Algebra<F> L = rigid_algebra(K, a.s);
        if (a.gamma.empty()) return algebra_c(K, L, a.n);
        return algebra_c(K, L, a.n, parse_list(K, a.gamma));
    }
    if (a.kind == "D") {
        Algebra<F> L = rigid_algebra(K, a.s);
        Subspace<F> S = marked_lines(K, GradedFlavor::Tensor, a.s + a.n, a.degree, a.marked);
        if (S.dim() == 0) fail("UsageError", "--kind D needs at least one --marked monomial");
        auto gamma = a.gamma.empty() ? distinct_units(K, a.n + 1) : parse_list(K, a.gamma);
        auto delta = a.delta.empty() ? distinct_units(K, a.degree + 1) : parse_list(K, a.delta);
        return algebra_d(K, L, a.n, S, a.degree, gamma, delta);
    }
    if (a.kind == "E") {
        if (a.group.empty()) fail("UsageError", "--kind E needs --group");
        PermGroup G = parse_group(a.group);
        std::vector<typename F::elem> lam =
            a.lambda.empty() ? realize_lambda(K, G) : parse_list(K, a.lambda);
        std::vector<typename F::elem> mu =
            a.mu.empty() ? distinct_units(K, G.order() + 1) : parse_list(K, a.mu);
        return algebra_e(K, G, lam, mu);
    }
    fail("UsageError", "unknown --kind '" + a.kind + "'");
}

int run_construct(const ConstructArgs& a) {
    if (a.kind == "wrap") {
        if (a.algebra.empty()) fail("UsageError", "--kind wrap needs --algebra FILE");
        if (a.variant != "standard" && a.variant != "zeta-zero")
            fail("UsageError", "--variant must be standard or zeta-zero");
        AnyAlgebra inner = load_algebra(a.algebra);
        return std::visit(
            [&](const auto& R) -> int {
                const auto& K = R.K;
                auto ab = distinct_units(K, 2);
                auto alpha = a.alpha.empty() ? ab[0] : K.parse(a.alpha);
                auto zeta = a.zeta.empty() ? ab[1] : K.parse(a.zeta);
                auto W = wrap_simple(R, alpha, zeta,
                                     a.variant == "zeta-zero" ? WrapVariant::ZetaZero
                                                              : WrapVariant::Standard);
                json payload = algebra_to_json(W);
                emit(a.io, payload, summary_text(W), &payload);
                return 0;
            },
            inner);
    }
    FieldSpec fs = field_arg(a.field);
    return with_field(fs, [&](const auto& K) -> int {
        auto A = build_kind(K, a);
        json payload = algebra_to_json(A);
        emit(a.io, payload, summary_text(A), &payload);
        return 0;
    });
}

// ----------------------------------------------------------------- verify --

int run_verify(const std::string& file, const Io& io) {
    AnyAlgebra any = load_algebra(file);
    return std::visit(
        [&](const auto& A) -> int {
            json checks = json::array();
            bool ok = true;
            checks.push_back({{"claim", "document parses and the structure constants are "
                                        "well formed"},
                              {"passed", true}});
            bool has_unit = false;
            for (const auto& b : A.blocks) has_unit = has_unit || b.role == "unit-line";
            if (has_unit) {
                json jc;
                jc["claim"] = "block hypotheses hold (unit, eigenspaces, pairings)";
                try {
                    verify_block_hypotheses(A);
                    jc["passed"] = true;
                } catch (const Error& e) {
                    jc["passed"] = false;
                    jc["witness"] = e.what();
                    ok = false;
                }
                checks.push_back(std::move(jc));
                if (ok) {
                    json jp;
                    jp["claim"] = "every derived coordinate is reachable from the scanned blocks";
                    try {
                        generation_plan(A);
                        jp["passed"] = true;
                    } catch (const Error& e) {
                        jp["passed"] = false;
                        jp["witness"] = e.what();
                        ok = false;
                    }
                    checks.push_back(std::move(jp));
                }
            } else {
                checks.push_back({{"claim", "block hypotheses"},
                                  {"passed", true},
                                  {"witness", "not applicable: no unit line declared"}});
            }
            json report;
            report["file"] = file;
            report["construction"] = A.construction;
            report["dim"] = A.dim();
            report["checks"] = std::move(checks);
            report["ok"] = ok;

            std::ostringstream text;
            text << A.construction << ": dim " << A.dim() << ", "
                 << (ok ? "all checks passed" : "checks FAILED") << "\n";
            for (const auto& c : report["checks"]) {
                text << "  [" << (c["passed"].get<bool>() ? "ok" : "FAIL") << "] "
                     << c["claim"].get<std::string>();
                if (c.contains("witness")) text << " -- " << c["witness"].get<std::string>();
                text << "\n";
            }
            emit(io, report, text.str());
            return ok ? 0 : 1;
        },
        any);
}

// ---------------------------------------------------------------- autgroup --

struct AutArgs {
    std::string algebra;
    std::uint64_t budget = 500000000;
    bool force = false;
    std::int64_t expect = -1;
    std::size_t workers = default_workers();
    Io io;
};

int run_autgroup(const AutArgs& a) {
    AnyAlgebra any = load_algebra(a.algebra);
    return std::visit(
        [&](const auto& A) -> int {
            using F = std::decay_t<decltype(A.K)>;
            EnumerationOptions<F> eo;
            eo.workers = a.workers;
            GenerationPlan<F> plan = generation_plan(A);
            AutomorphismSet<F> auts = enumerate_automorphisms(
                A, plan, a.force ? UINT64_MAX : a.budget, eo);

            json report;
            report["file"] = a.algebra;
            report["dim"] = A.dim();
            report["order"] = auts.order;
            if (auts.order <= 32) {
                json elems = json::array();
                for (const auto& m : auts.elements) elems.push_back(mat_json(A.K, m));
                report["elements"] = std::move(elems);
            }
            int rc = 0;
            if (a.expect >= 0 && static_cast<std::uint64_t>(a.expect) != auts.order) {
                report["expected"] = a.expect;
                rc = 1;
            }
            std::ostringstream text;
            text << "automorphism group order " << auts.order;
            if (rc) text << " (expected " << a.expect << ")";
            text << "\n";
            emit(a.io, report, text.str());
            return rc;
        },
        any);
}

// -------------------------------------------------------------- simplicity --

struct SimpArgs {
    std::string algebra, mode = "exhaustive";
    std::uint64_t seed = 1;
    std::size_t rounds = 40;
    Io io;
};

int run_simplicity(const SimpArgs& a) {
    SimplicityMode mode;
    if (a.mode == "exhaustive")
        mode = SimplicityMode::Exhaustive;
    else if (a.mode == "norton")
        mode = SimplicityMode::Norton;
    else if (a.mode == "sampled")
        mode = SimplicityMode::Sampled;
    else
        fail("UsageError", "--mode must be exhaustive, norton or sampled");

    AnyAlgebra any = load_algebra(a.algebra);
    return std::visit(
        [&](const auto& A) -> int {
            auto res = is_simple(A, mode, a.seed, a.rounds);
            json report;
            report["file"] = a.algebra;
            report["mode"] = a.mode;
            report["seed"] = a.seed;
            report["rounds"] = a.rounds;
            report["detail"] = res.detail;
            std::ostringstream text;
            int rc;
            if (res.verdict == SimplicityVerdict::Simple) {
                report["simple"] = true;
                text << "simple: " << res.detail << "\n";
                rc = 0;
            } else if (res.verdict == SimplicityVerdict::NotSimple) {
                report["simple"] = false;
                report["witness"] = mat_json(A.K, res.witness.basis);
                report["witness_text"] = span_text(A, res.witness);
                text << "NOT simple: proper ideal " << span_text(A, res.witness) << "\n";
                rc = 1;
            } else {
                report["simple"] = nullptr;
                text << "inconclusive: " << res.detail << "\n";
                rc = 3;
            }
            emit(a.io, report, text.str());
            return rc;
        },
        any);
}

// -------------------------------------------------------------- normalizer --

struct NormArgs {
    std::string group, lambda, field;
    Io io;
};

int run_normalizer(const NormArgs& a) {
    FieldSpec fs = field_arg(a.field);
    PermGroup G = parse_group(a.group);
    return with_field(fs, [&](const auto& K) -> int {
        auto lam = parse_list(K, a.lambda);
        auto f = invariant_f(K, G, lam);
        PermGroup stab = line_normalizer(K, G.degree, G.order(), f);
        json report;
        report["group"] = a.group;
        report["lambda"] = json::array();
        for (const auto& c : lam) report["lambda"].push_back(K.to_string(c));
        report["field"] = field_to_json(fs);
        report["order"] = stab.order();
        json elems = json::array();
        for (const auto& p : stab.elements) elems.push_back(perm_to_string(p));
        report["elements"] = std::move(elems);
        std::ostringstream text;
        text << "line stabilizer inside S_" << G.degree << " has order " << stab.order() << "\n";
        for (const auto& p : stab.elements) text << "  " << perm_to_string(p) << "\n";
        emit(a.io, report, text.str());
        return 0;
    });
}

// ------------------------------------------------------------- trace-forms --

int run_trace_forms(const std::string& file, const Io& io) {
    AnyAlgebra any = load_algebra(file);
    return std::visit(
        [&](const auto& A) -> int {
            static const std::pair<const char*, TraceKind> kinds[] = {
                {"LL", TraceKind::LL}, {"RR", TraceKind::RR},
                {"LR", TraceKind::LR}, {"RL", TraceKind::RL}};
            json report;
            report["file"] = file;
            report["dim"] = A.dim();
            json forms;
            std::ostringstream text;
            text << "trace forms on a " << A.dim() << "-dimensional algebra\n";
            for (const auto& [name, kind] : kinds) {
                auto tf = trace_form(A, kind);
                json jf;
                jf["gram"] = mat_json(A.K, tf.gram);
                jf["nondegenerate"] = tf.nondegenerate;
                forms[name] = std::move(jf);
                text << "  " << name << ": "
                     << (tf.nondegenerate ? "nondegenerate" : "degenerate") << "\n";
            }
            report["forms"] = std::move(forms);
            emit(io, report, text.str());
            return 0;
        },
        any);
}

// ----------------------------------------------------------- export-tensor --

int run_export_tensor(const std::string& file, const Io& io) {
    AnyAlgebra any = load_algebra(file);
    return std::visit(
        [&](const auto& A) -> int {
            json payload;
            payload["field"] = field_to_json(spec_of(A.K));
            payload["dim"] = A.dim();
            json entries = json::array();
            for (const auto& e : A.entries)
                entries.push_back(json::array({e.i, e.j, e.k, A.K.to_string(e.c)}));
            payload["entries"] = std::move(entries);
            if (!io.out.empty())
                write_file(io.out, payload.dump(2) + "\n");
            else
                std::cout << payload.dump(2) << "\n";
            return 0;
        },
        any);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for finite-dimensional algebras with a prescribed "
                 "automorphism group"};
    app.require_subcommand(1);
    std::function<int()> run;

    RealizeArgs ra;
    auto* realize = app.add_subcommand(
        "realize", "build an algebra whose automorphism group is the given permutation group");
    realize->add_option("--group", ra.group, "permutation group, e.g. \"n=2; gens=(1 2)\"")
        ->required();
    realize->add_option("--field", ra.field, "p, p,k or p,k,c0,..,ck")->required();
    realize->add_option("--params", ra.params, "JSON file overriding lambda/mu/alpha/zeta");
    realize->add_option("--budget", ra.budget, "candidate cap for the automorphism sweep");
    realize->add_option("--workers", ra.workers, "parallel sweep threads");
    add_io(realize, ra.io);
    realize->callback([&] { run = [&] { return run_realize(ra); }; });

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build one of the component algebras");
    construct->add_option("--kind", ca.kind, "rigid|B|A|C|D|E|wrap")->required();
    construct->add_option("--field", ca.field, "p, p,k or p,k,c0,..,ck");
    construct->add_option("--s", ca.s, "rigid core dimension");
    construct->add_option("--n", ca.n, "exterior variable count");
    construct->add_option("--vars", ca.vars, "graded tower variable count (kind A)");
    construct->add_option("--degree", ca.degree, "graded tower degree (kinds A and D)");
    construct->add_option("--flavor", ca.flavor, "tensor|symmetric (kind A)");
    construct->add_option("--marked", ca.marked, "top-layer monomial indices for the marked lines");
    construct->add_option("--gamma", ca.gamma, "eigenvalue list (kinds C and D)");
    construct->add_option("--delta", ca.delta, "layer eigenvalue list (kind D)");
    construct->add_option("--group", ca.group, "permutation group (kind E)");
    construct->add_option("--lambda", ca.lambda, "scalar tuple (kind E)");
    construct->add_option("--mu", ca.mu, "unit tuple (kind E)");
    construct->add_option("--algebra", ca.algebra, "inner algebra file (kind wrap)");
    construct->add_option("--alpha", ca.alpha, "mirror eigenvalue (kind wrap)");
    construct->add_option("--zeta", ca.zeta, "mixing scalar (kind wrap)");
    construct->add_option("--variant", ca.variant, "standard|zeta-zero (kind wrap)");
    add_io(construct, ca.io);
    construct->callback([&] { run = [&] { return run_construct(ca); }; });

    std::string vfile;
    Io vio;
    auto* verify = app.add_subcommand("verify", "re-run the consistency checks on a saved algebra");
    verify->add_option("--algebra", vfile, "algebra JSON file")->required();
    add_io(verify, vio);
    verify->callback([&] { run = [&] { return run_verify(vfile, vio); }; });

    AutArgs aa;
    auto* autgroup = app.add_subcommand("autgroup", "enumerate the automorphism group");
    autgroup->add_option("--algebra", aa.algebra, "algebra JSON file")->required();
    autgroup->add_option("--budget", aa.budget, "candidate cap");
    autgroup->add_flag("--force", aa.force, "ignore the candidate cap");
    autgroup->add_option("--expect", aa.expect, "fail unless the order matches");
    autgroup->add_option("--workers", aa.workers, "parallel sweep threads");
    add_io(autgroup, aa.io);
    autgroup->callback([&] { run = [&] { return run_autgroup(aa); }; });

    SimpArgs sa;
    auto* simplicity = app.add_subcommand("simplicity", "look for proper two-sided ideals");
    simplicity->add_option("--algebra", sa.algebra, "algebra JSON file")->required();
    simplicity->add_option("--mode", sa.mode, "exhaustive|norton|sampled");
    simplicity->add_option("--seed", sa.seed, "RNG seed (norton/sampled)");
    simplicity->add_option("--rounds", sa.rounds, "attempts (norton/sampled)");
    add_io(simplicity, sa.io);
    simplicity->callback([&] { run = [&] { return run_simplicity(sa); }; });

    NormArgs na;
    auto* normalizer =
        app.add_subcommand("normalizer", "stabilizer of the invariant line inside S_n");
    normalizer->add_option("--group", na.group, "permutation group fixing the scalar tuple")
        ->required();
    normalizer->add_option("--lambda", na.lambda, "scalar tuple, comma separated")->required();
    normalizer->add_option("--field", na.field, "p, p,k or p,k,c0,..,ck")->required();
    add_io(normalizer, na.io);
    normalizer->callback([&] { run = [&] { return run_normalizer(na); }; });

    std::string tfile;
    Io tio;
    auto* traces = app.add_subcommand("trace-forms", "Gram matrices of the four trace forms");
    traces->add_option("--algebra", tfile, "algebra JSON file")->required();
    add_io(traces, tio);
    traces->callback([&] { run = [&] { return run_trace_forms(tfile, tio); }; });

    std::string xfile;
    Io xio;
    auto* xport = app.add_subcommand("export-tensor", "dump the structure-constant tensor");
    xport->add_option("--algebra", xfile, "algebra JSON file")->required();
    add_io(xport, xio);
    xport->callback([&] { run = [&] { return run_export_tensor(xfile, xio); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return run();
    } catch (const autalg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
