#include "cremona/verdict.hpp"

#include <json.hpp>

namespace cremona {

std::string verdict_json(const ConjugacyVerdict& v) {
    // Certificates may hold integers beyond int64, so they are spliced in as raw text.
    if (const auto* c = std::get_if<Conjugate>(&v))
        return R"({"verdict":"conjugate","certificate":)" + c->certificate.to_string() + "}";
    nlohmann::ordered_json j;
    if (const auto* nc = std::get_if<NotConjugate>(&v)) {
        j["verdict"] = "not_conjugate";
        j["witness"] = nc->witness;
    } else {
        j["verdict"] = "undecided";
        j["bound"] = std::get<Undecided>(v).bound_used;
    }
    return j.dump();
}

bool verify_certificate(const IntMatrix& m, const IntMatrix& n, const IntMatrix& p) {
    if (m.dim() != n.dim() || m.dim() != p.dim()) return false;
    if (!is_unimodular(p)) return false;
    return p * m == n * p;
}

} // namespace cremona
