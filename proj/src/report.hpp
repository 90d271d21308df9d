#ifndef LINIDEAL_REPORT_HPP
#define LINIDEAL_REPORT_HPP

#include <json.hpp>

#include "linearizer.hpp"
#include "realmanifolds.hpp"
#include "smalldivisors.hpp"

namespace linideal {

// All reports are JSON with sorted keys, so identical inputs yield
// byte-identical documents. Scalars render as ["re", "im"] string pairs,
// terms as [[q_1,...,q_n], "re", "im"].
using Json = nlohmann::json;

Json scalar_json(const Scalar& s);
Json series_json(const Series& s);
Json map_json(const PolyMap& m);
Json mat_json(const Mat& m);
Json multiindex_json(const Multiindex& q);
Json ideal_json(const MonomialIdeal& I);
Json resonance_json(const ResonanceReport& r);
Json omega_json(const OmegaSequence& seq);
Json theta_json(const ThetaResult& t);
Json majorant_json(const MajorantDiagnostics& d);
Json linearization_json(const LinearizationResult& res);
Json verification_json(const VerificationReport& v);
Json involution_json(const AntiInvolution& rho);
Json straightening_json(const StraighteningReport& rep);

std::string render_report(const Json& j);

} // namespace linideal

#endif
