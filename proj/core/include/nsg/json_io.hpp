#ifndef NSG_JSON_IO_HPP
#define NSG_JSON_IO_HPP

#include <json.hpp>

#include "nsg/classify.hpp"
#include "nsg/extensions.hpp"
#include "nsg/presentation.hpp"
#include "nsg/relative_ideal.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/trunc_algebra.hpp"
#include "nsg/ulrich.hpp"

namespace nsg {

using Json = nlohmann::ordered_json;

// All numbers in reports are exact integers; nothing is ever emitted as a
// floating point value.

Json to_json(const NumericalSemigroup& h);
Json to_json(const SemigroupInvariants& inv);
Json to_json(const RelativeIdeal& e);
Json to_json(const HilbertData& d);
Json to_json(const KRStructure& st);
Json to_json(const PfSymmetryReport& rep);
Json to_json(const ClassificationReport& rep);
Json to_json(const UlrichVerdict& v);
Json to_json(const UlrichEnumeration& e);
Json to_json(const ExtensionReport& rep);
Json to_json(const ExtensionCanonicalCertificate& cert);
Json to_json(const GeneralUlrichVerdict& v);
Json to_json(const FamilyScanReport& rep);
Json to_json(const GluingUlrichSet& s);
Json to_json(const GorensteinCorrespondence& c);
Json to_json(const MinMultXr& x);
Json to_json(const KernelEvidence& e);

NumericalSemigroup semigroup_from_json(const Json& j);
RelativeIdeal ideal_from_json(const Json& j);

}  // namespace nsg

#endif
