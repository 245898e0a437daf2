// amalgam: command-line front end for ring construction, QF analysis and the
// corpus sweep.
//
// Exit codes: 0 success, 1 verdict disagreement or failed verification,
// 2 parse/scope/hypothesis error, 3 capacity.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "amalgam/construct.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/expr_parser.hpp"
#include "amalgam/iso_maps.hpp"
#include "amalgam/qf.hpp"
#include "amalgam/report.hpp"
#include "amalgam/sweep.hpp"

namespace {

using namespace amalgam;

constexpr int kDisagreement = 1;
constexpr int kUsage = 2;
constexpr int kCapacity = 3;

void print(const Record& rec, Format fmt) { std::cout << render(rec, fmt) << '\n'; }

int cmd_analyze(const std::string& src, Format fmt) {
    const auto b = parse_and_build(src);
    print(qf_report_record(*b.ring, analyze(b.ring)), fmt);
    return 0;
}

int cmd_theorem(const std::string& src, const std::vector<unsigned>& gens_in, Format fmt) {
    const auto b = parse_and_build(src);
    std::vector<Element> gens;
    for (auto g : gens_in) {
        if (g >= b.ring->order())
            throw ParseError("element index " + std::to_string(g) + " out of range", 0);
        gens.push_back(static_cast<Element>(g));
    }
    const auto ideal = ideal_from_generators(b.ring, gens);
    const auto v = check_main_theorem(ideal, {}, QfMethod::FullLattice);
    print(theorem_record(*b.ring, b.expr, ideal, v), fmt);
    return v.agrees ? 0 : kDisagreement;
}

int cmd_decompose(const std::string& src, Format fmt) {
    const auto b = parse_and_build(src);
    const auto factors = local_decomposition(b.ring);
    const auto assembled = assemble_decomposition(b.ring, factors);
    const auto check = verify_ring_map(assembled, true, true);

    Record rec;
    rec["expr"] = b.expr->to_string();
    rec["order"] = b.ring->order();
    auto orders = nlohmann::json::array();
    for (const auto& f : factors) orders.push_back(f.ring->order());
    rec["factor_orders"] = orders;
    auto list = nlohmann::ordered_json::array();
    for (const auto& f : factors) {
        Record fr;
        fr["order"] = f.ring->order();
        fr["expr"] = f.ring->origin()->to_string();
        fr["local"] = is_local(f.ring).local;
        fr["qf"] = is_quasi_frobenius(f.ring, {}, QfMethod::Auto).qf;
        fr["projection"] = hex64(fingerprint(f.projection));
        list.push_back(fr);
    }
    rec["factors"] = list;
    rec["assembled_iso"] = check.ok;
    rec["assembled_fingerprint"] = hex64(fingerprint(assembled));
    print(rec, fmt);
    return check.ok ? 0 : kDisagreement;
}

int cmd_ideals(const std::string& src, Format fmt) {
    const auto b = parse_and_build(src);
    const auto ideals = enumerate_ideals(b.ring);
    Record rec;
    rec["expr"] = b.expr->to_string();
    rec["order"] = b.ring->order();
    rec["ideal_count"] = ideals.size();
    auto list = nlohmann::ordered_json::array();
    for (const auto& i : ideals) {
        auto ir = ideal_record(i);
        ir["generators"] = greedy_generators(i);
        list.push_back(ir);
    }
    rec["ideals"] = list;
    print(rec, fmt);
    return 0;
}

int cmd_labels(const std::string& src, Format fmt) {
    const auto b = parse_and_build(src);
    if (fmt == Format::Structured) {
        Record rec;
        rec["expr"] = b.expr->to_string();
        rec["order"] = b.ring->order();
        rec["labels"] = b.ring->labels();
        print(rec, fmt);
    } else {
        for (std::size_t x = 0; x < b.ring->order(); ++x)
            std::cout << x << '\t' << b.ring->label(static_cast<Element>(x)) << '\n';
    }
    return 0;
}

Duplication rebuild_dup(const BuiltExpr& b) {
    const auto* node = std::get_if<RingExpr::Dup>(&b.expr->node());
    if (!node) throw ScopeError("expression is not a duplication: " + b.expr->to_string());
    return make_duplication(build(*node->base), node->gens);
}

Record map_record(const char* name, const RingMap& m, bool bijective) {
    Record rec;
    rec["map"] = name;
    rec["domain_order"] = m.domain->order();
    rec["codomain_order"] = m.codomain->order();
    const auto v = verify_ring_map(m, m.unital, bijective);
    rec["verified"] = v.ok;
    rec["unital"] = m.unital;
    if (!v.ok) rec["failed_property"] = v.property;
    rec["fingerprint"] = hex64(fingerprint(m));
    return rec;
}

int cmd_verify_iso(const std::string& map, const std::vector<std::string>& exprs, int idem,
                   Format fmt) {
    auto need = [&](std::size_t k) {
        if (exprs.size() != k)
            throw ScopeError(map + " expects " + std::to_string(k) + " expression(s)");
    };
    Record rec;
    if (map == "zeta") {
        need(2);
        const auto d1 = rebuild_dup(parse_and_build(exprs[0]));
        const auto d2 = rebuild_dup(parse_and_build(exprs[1]));
        rec = map_record("zeta", map_zeta(d1, d2), true);
    } else if (map == "psi" || map == "phi") {
        need(1);
        const auto b = parse_and_build(exprs[0]);
        if (idem < 0 || static_cast<std::size_t>(idem) >= b.ring->order())
            throw ScopeError(map + " needs --idempotent with a valid element index");
        const auto e = static_cast<Element>(idem);
        if (b.ring->mul(e, e) != e) throw HypothesisError("element is not idempotent");
        const auto i = principal_ideal(b.ring, e);
        const auto j = principal_ideal(b.ring, b.ring->sub(b.ring->one(), e));
        const auto m = map == "psi" ? map_psi(b.ring, i, j) : map_phi(b.ring, i, j);
        rec = map_record(map.c_str(), m, true);
        rec["same_qf"] = is_quasi_frobenius(m.domain, {}, QfMethod::Auto).qf ==
                         is_quasi_frobenius(m.codomain, {}, QfMethod::Auto).qf;
    } else if (map == "epsilon") {
        need(1);
        const auto d = rebuild_dup(parse_and_build(exprs[0]));
        const auto eps = map_epsilon(d);
        rec = map_record("epsilon", eps, false);
        rec["kernel_is_0xI"] = kernel(eps) == map_iota(d);
    } else if (map == "pi") {
        need(1);
        const auto b = parse_and_build(exprs[0]);
        if (idem < 0 || static_cast<std::size_t>(idem) >= b.ring->order())
            throw ScopeError("pi needs --idempotent with a valid element index");
        const auto s = map_pi(b.ring, static_cast<Element>(idem));
        rec = map_record("pi", s.pi, false);
        rec["splits"] = splits_projection(s);
        rec["module_linear"] = is_module_linear(s);
    } else {
        throw ScopeError("unknown map '" + map + "' (zeta, psi, phi, epsilon, pi)");
    }
    print(rec, fmt);
    bool ok = rec["verified"].get<bool>();
    for (const char* k : {"same_qf", "kernel_is_0xI", "splits", "module_linear"})
        if (rec.contains(k)) ok = ok && rec[k].get<bool>();
    return ok ? 0 : kDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite commutative rings, amalgamated duplications and quasi-Frobenius checks"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));

    std::string expr;
    std::vector<unsigned> gens;

    auto* analyze_cmd = app.add_subcommand("analyze", "QF report for a ring expression");
    analyze_cmd->add_option("expr", expr, "Ring expression")->required();

    auto* theorem_cmd = app.add_subcommand("theorem", "Check the main theorem on (R, ideal)");
    theorem_cmd->add_option("expr", expr, "Ring expression")->required();
    theorem_cmd->add_option("generators", gens, "Ideal generators (element indices)");

    auto* decompose_cmd = app.add_subcommand("decompose", "Split into local factors");
    decompose_cmd->add_option("expr", expr, "Ring expression")->required();

    auto* ideals_cmd = app.add_subcommand("ideals", "List all ideals in canonical order");
    ideals_cmd->add_option("expr", expr, "Ring expression")->required();

    auto* labels_cmd = app.add_subcommand("labels", "Dump the index/label table");
    labels_cmd->add_option("expr", expr, "Ring expression")->required();

    std::string map_name;
    std::vector<std::string> map_exprs;
    int idem = -1;
    auto* iso_cmd = app.add_subcommand("verify-iso", "Build and verify zeta, psi, phi, epsilon or pi");
    iso_cmd->add_option("map", map_name, "zeta | psi | phi | epsilon | pi")->required();
    iso_cmd->add_option("exprs", map_exprs, "Ring expression(s)")->required();
    iso_cmd->add_option("-e,--idempotent", idem, "Idempotent element index (psi, phi, pi)");

    SweepConfig sweep;
    bool exclude_zero = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run every check over the generated corpus");
    sweep_cmd->add_option("--max-order", sweep.max_order, "Order cap for corpus rings")
        ->capture_default_str();
    sweep_cmd->add_option("--base-order", sweep.base_order,
                          "Order cap for zmod(n) and zmod products (0: max-order)")
        ->capture_default_str();
    sweep_cmd->add_option("--max-depth", sweep.max_depth, "Quotient/duplication nesting")
        ->capture_default_str();
    sweep_cmd->add_option("--workers", sweep.worker_count, "Worker threads (0: all cores)")
        ->capture_default_str();
    sweep_cmd->add_flag("--include-full-ideal", sweep.include_full_ideal,
                        "Also check I = R pairs");
    sweep_cmd->add_flag("--exclude-zero-ideal", exclude_zero, "Skip I = 0 pairs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }
    const Format fmt = format == "structured" ? Format::Structured : Format::Text;

    try {
        if (*analyze_cmd) return cmd_analyze(expr, fmt);
        if (*theorem_cmd) return cmd_theorem(expr, gens, fmt);
        if (*decompose_cmd) return cmd_decompose(expr, fmt);
        if (*ideals_cmd) return cmd_ideals(expr, fmt);
        if (*labels_cmd) return cmd_labels(expr, fmt);
        if (*iso_cmd) return cmd_verify_iso(map_name, map_exprs, idem, fmt);
        if (*sweep_cmd) {
            if (sweep.max_order > sweep.limits.max_order)
                throw ScopeError("--max-order exceeds the construction cap");
            sweep.include_zero_ideal = !exclude_zero;
            sweep.format = fmt;
            const auto s = run_sweep(sweep, std::cout);
            if (s.failures() != 0) {
                std::cerr << "counterexample: " << s.minimal_counterexample.value_or("?") << '\n';
                return kDisagreement;
            }
            return 0;
        }
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kCapacity;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
