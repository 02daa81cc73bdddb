#include "nfb/report.hpp"

#include "nfb/words.hpp"

namespace nfb {

namespace {

using nlohmann::ordered_json;

const char* status_name(Verdict::Status s) {
    return s == Verdict::Status::Holds ? "holds" : "fails";
}

const char* status_name(IsotermVerdict::Status s) {
    switch (s) {
    case IsotermVerdict::Status::Isoterm: return "isoterm";
    case IsotermVerdict::Status::NotIsoterm: return "not-isoterm";
    case IsotermVerdict::Status::IsotermUpToBound: return "isoterm-up-to-bound";
    }
    return "?";
}

const char* status_name(CheckReport::Status s) {
    switch (s) {
    case CheckReport::Status::Pass: return "pass";
    case CheckReport::Status::BoundedPass: return "bounded-pass";
    case CheckReport::Status::Fail: return "fail";
    }
    return "?";
}

std::string identity_text(const Identity& id) {
    return render(id.lhs) + " = " + render(id.rhs);
}

} // namespace

ordered_json assignment_json(const Assignment& a, const FiniteMonoid& M) {
    ordered_json out = ordered_json::array();
    for (const auto& [var, elem] : a) {
        ordered_json entry;
        entry["var"] = var.name;
        entry["element"] = elem;
        entry["name"] = M.elem_name(elem);
        out.push_back(std::move(entry));
    }
    return out;
}

ordered_json verdict_json(const Verdict& v, const FiniteMonoid& M) {
    ordered_json out;
    out["status"] = status_name(v.status);
    out["route"] = v.route;
    out["witness"] = v.witness ? assignment_json(*v.witness, M) : ordered_json(nullptr);
    out["note"] = v.note;
    return out;
}

ordered_json isoterm_json(const IsotermVerdict& v) {
    ordered_json out;
    out["status"] = status_name(v.status);
    out["witness"] = v.witness ? ordered_json(render(*v.witness)) : ordered_json(nullptr);
    out["certificate"] = v.certificate;
    out["bound"] = v.bound ? ordered_json(*v.bound) : ordered_json(nullptr);
    return out;
}

ordered_json check_json(const CheckReport& r) {
    ordered_json out;
    out["status"] = status_name(r.status);
    out["bound"] = r.bound != 0 ? ordered_json(r.bound) : ordered_json(nullptr);
    out["witness"] = r.witness ? ordered_json(render(*r.witness)) : ordered_json(nullptr);
    out["detail"] = r.detail;
    return out;
}

ordered_json condition_json(const ConditionReport& rep, const FiniteMonoid& M) {
    ordered_json out;
    out["condition"] = rep.condition;
    out["monoid"] = rep.monoid;
    out["overall"] = rep.all_pass() ? "pass" : "fail";
    const HypothesisReport* first = rep.first_failure();
    out["first_failure"] = first ? ordered_json(first->id) : ordered_json(nullptr);
    out["scale_note"] = rep.scale_note;
    ordered_json hyps = ordered_json::array();
    for (const HypothesisReport& h : rep.hypotheses) {
        ordered_json entry;
        entry["id"] = h.id;
        entry["status"] = status_name(h.status);
        entry["bound"] = h.bound ? ordered_json(*h.bound) : ordered_json(nullptr);
        entry["identity"] = h.identity ? ordered_json(identity_text(*h.identity))
                                       : ordered_json(nullptr);
        entry["witness_word"] =
            h.witness_word ? ordered_json(render(*h.witness_word)) : ordered_json(nullptr);
        entry["witness_assignment"] = h.witness_assignment
                                          ? assignment_json(*h.witness_assignment, M)
                                          : ordered_json(nullptr);
        entry["detail"] = h.detail;
        hyps.push_back(std::move(entry));
    }
    out["hypotheses"] = std::move(hyps);
    return out;
}

} // namespace nfb
