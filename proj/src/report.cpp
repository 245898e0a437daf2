#include "amalgam/report.hpp"

#include <cstdio>

namespace amalgam {

namespace {

bool bare_ok(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c == ' ' || c == '"' || c == '=' || c == '\n' || c == '\\') return false;
    return true;
}

std::string text_value(const nlohmann::ordered_json& v) {
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        return bare_ok(s) ? s : v.dump();
    }
    if (v.is_array()) {
        std::string out = "[";
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k) out += ",";
            out += text_value(v[k]);
        }
        return out + "]";
    }
    if (v.is_object()) return v.dump();
    return v.dump();
}

}  // namespace

std::string render(const Record& rec, Format fmt, bool one_line) {
    if (fmt == Format::Structured) return rec.dump();
    std::string out;
    for (auto it = rec.begin(); it != rec.end(); ++it) {
        if (!out.empty()) out += one_line ? " " : "\n";
        out += it.key();
        out += one_line ? "=" : ": ";
        out += text_value(it.value());
    }
    return out;
}

nlohmann::json labels_of(const RingTable& r, const std::vector<Element>& xs) {
    auto out = nlohmann::json::array();
    for (auto x : xs) out.push_back(r.label(x));
    return out;
}

Record ideal_record(const IdealSet& i) {
    Record rec;
    rec["size"] = i.size();
    rec["members"] = i.members();
    rec["labels"] = labels_of(*i.ring(), i.members());
    return rec;
}

Record qf_report_record(const RingTable& r, const QfReport& rep) {
    Record rec;
    rec["expr"] = rep.expr->to_string();
    rec["order"] = rep.order;
    rec["is_local"] = rep.is_local;
    rec["ideal_count"] = rep.ideal_count;
    rec["idempotents"] = rep.idempotents;
    rec["idempotent_labels"] = labels_of(r, rep.idempotents);
    rec["is_qf"] = rep.is_qf;
    if (rep.counterexample) {
        rec["counterexample"] = rep.counterexample->members();
        rec["counterexample_labels"] = labels_of(r, rep.counterexample->members());
    } else {
        rec["counterexample"] = nullptr;
    }
    return rec;
}

Record theorem_record(const RingTable& r, const ExprPtr& ring_expr, const IdealSet& i,
                      const TheoremVerdict& v) {
    Record rec;
    rec["expr"] = ring_expr->to_string();
    rec["ideal"] = i.members();
    rec["ideal_size"] = i.size();
    rec["lhs_dup_qf"] = v.lhs;
    rec["rhs_ring_qf"] = v.rhs_qf;
    if (v.rhs_idem) {
        rec["rhs_idempotent"] = *v.rhs_idem;
        rec["rhs_idempotent_label"] = r.label(*v.rhs_idem);
    } else {
        rec["rhs_idempotent"] = nullptr;
        rec["rhs_idempotent_label"] = nullptr;
    }
    rec["agrees"] = v.agrees;
    return rec;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace amalgam
