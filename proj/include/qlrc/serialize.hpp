#ifndef QLRC_SERIALIZE_HPP
#define QLRC_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "families.hpp"

namespace qlrc {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const ExponentSet& D) {
    return ordered_json{{"N", D.N}, {"elements", D.elements}};
}

inline ExponentSet exponent_set_from_json(const ordered_json& j) {
    return {j.at("N").get<int64_t>(), j.at("elements").get<std::vector<int64_t>>()};
}

inline ordered_json to_json(const EvaluationDomain& D) {
    return ordered_json{{"N", D.N}, {"n", D.n}, {"lambda", D.lambda},
                        {"kind", to_string(D.kind)}, {"points", D.points}};
}

inline ordered_json to_json(const LinearCode& C) {
    ordered_json j;
    j["field"] = C.field_order;
    j["n"] = C.n;
    j["k"] = C.dim();
    if (C.distance) {
        j["d"] = *C.distance;
        j["d_method"] = C.distance_method;
    } else {
        j["d"] = nullptr;
        j["d_method"] = "";
    }
    j["generator"] = C.generator.export_text();
    return j;
}

inline ordered_json to_json(const LocalityCertificate& cert) {
    return ordered_json{{"r", cert.r}, {"delta", cert.delta}, {"sets", cert.recovery_sets},
                        {"method", cert.method}, {"classical_defect", cert.classical_defect}};
}

inline ordered_json to_json(const QuantumCodeRecord& rec) {
    return ordered_json{{"q", rec.q},
                        {"n", rec.n},
                        {"k", rec.k},
                        {"d", rec.d},
                        {"d_method", rec.d_method},
                        {"r", rec.r},
                        {"delta", rec.delta},
                        {"quantum_defect", rec.quantum_defect},
                        {"pure", rec.pure},
                        {"optimal", rec.optimal},
                        {"family", rec.family},
                        {"family_params", rec.family_params}};
}

inline ordered_json to_json(const FamilyInstance& inst) {
    ordered_json j;
    j["family"] = to_string(inst.spec.family);
    j["q"] = inst.spec.q;
    j["s"] = inst.spec.s;
    j["lambda"] = inst.spec.lambda;
    j["u_or_v"] = inst.spec.uv;
    j["axes"] = inst.spec.axis_sizes;
    j["mode"] = inst.mode == DualityMode::hermitian ? "hermitian" : "euclidean";
    j["exact"] = inst.exact;
    j["delta_set"] = to_json(inst.delta);
    j["classical"] = ordered_json{{"n", inst.classical_n},
                                  {"k", inst.classical_k},
                                  {"d", inst.classical_d},
                                  {"defect", inst.classical_defect}};
    j["locality"] = to_json(inst.certificate);
    j["quantum_local"] = inst.quantum_local;
    j["inner_code"] = to_json(inst.inner);
    j["outer_code"] = to_json(inst.outer);
    j["record"] = to_json(inst.record);
    return j;
}

inline ordered_json to_json(const TableRow& row) {
    return ordered_json{{"family", row.family}, {"q", row.q},           {"s", row.s},
                        {"lambda", row.lambda}, {"u_or_v", row.uv},     {"axes", row.axis_sizes},
                        {"n", row.n},           {"k", row.k},           {"d", row.d},
                        {"r", row.r},           {"delta", row.delta},   {"verified", row.verified}};
}

inline std::string csv_header() {
    return "family,q,s,lambda,u_or_v,n,k,d,r,delta,classical_defect,quantum_defect,pure,verified";
}

inline std::string to_csv(const QuantumCodeRecord& rec, int s, int64_t lambda, int64_t uv,
                          int64_t classical_defect) {
    std::ostringstream os;
    os << rec.family << ',' << rec.q << ',' << s << ',' << lambda << ',' << uv << ',' << rec.n << ','
       << rec.k << ',' << rec.d << ',' << rec.r << ',' << rec.delta << ',' << classical_defect << ','
       << rec.quantum_defect << ',' << (rec.pure ? "true" : "false") << ','
       << (rec.d_method == "verified" ? "true" : "false");
    return os.str();
}

inline std::string to_csv(const TableRow& row) {
    std::ostringstream os;
    os << row.family << ',' << row.q << ',' << row.s << ',' << row.lambda << ',' << row.uv << ','
       << row.n << ',' << row.k << ',' << row.d << ',' << row.r << ',' << row.delta << ",,,,"
       << (row.verified ? "true" : "false");
    return os.str();
}

} // namespace qlrc

#endif
