#ifndef SEMALG_SERIALIZE_HPP
#define SEMALG_SERIALIZE_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "semalg/decompose.hpp"
#include "semalg/egharness.hpp"
#include "semalg/regdeg.hpp"
#include "semalg/ringprops.hpp"

namespace semalg {

using OrderedJson = nlohmann::ordered_json;

// Integers survive round-trips exactly: values beyond 53-bit magnitude are
// emitted as decimal strings.
OrderedJson json_int(const Int& v);
Int int_from_json(const OrderedJson& j);
OrderedJson json_vec(const IntVec& v);
IntVec vec_from_json(const OrderedJson& j);

struct SemigroupDocument {
  std::size_t ambient_dim = 0;
  std::vector<IntVec> generators;
  std::optional<std::vector<IntVec>> subsemigroup;
  unsigned long field_char = 0;
};

SemigroupDocument parse_semigroup_document(const OrderedJson& j);
OrderedJson semigroup_document_json(const SemigroupDocument& doc);

OrderedJson decomposition_json(const Decomposition& dec,
                               unsigned long field_char);
OrderedJson property_report_json(const PropertyReport& rep,
                                 unsigned long field_char);
OrderedJson regularity_json(const RegularityResult& res);

}  // namespace semalg

#endif
