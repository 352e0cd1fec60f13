#include "semalg/serialize.hpp"

#include "semalg/toric.hpp"

namespace semalg {

namespace {

const Int kSafeMax = (Int(1) << 53) - 1;

}  // namespace

OrderedJson json_int(const Int& v) {
  if (abs(v) <= kSafeMax) return OrderedJson(v.get_si());
  return OrderedJson(v.get_str());
}

Int int_from_json(const OrderedJson& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument("expected an integer or integer string");
}

OrderedJson json_vec(const IntVec& v) {
  OrderedJson a = OrderedJson::array();
  for (const Int& x : v) a.push_back(json_int(x));
  return a;
}

IntVec vec_from_json(const OrderedJson& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

namespace {

std::vector<IntVec> vec_list_from_json(const OrderedJson& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a nonempty array of vectors");
  std::vector<IntVec> out;
  for (const auto& x : j) out.push_back(vec_from_json(x));
  return out;
}

OrderedJson vec_list_json(const std::vector<IntVec>& vs) {
  OrderedJson a = OrderedJson::array();
  for (const IntVec& v : vs) a.push_back(json_vec(v));
  return a;
}

}  // namespace

SemigroupDocument parse_semigroup_document(const OrderedJson& j) {
  if (!j.is_object()) throw std::invalid_argument("document must be an object");
  if (j.contains("format_version")) {
    if (!j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != 1)
      throw std::invalid_argument("unsupported format_version");
  }
  SemigroupDocument doc;
  if (!j.contains("generators"))
    throw std::invalid_argument("document lacks \"generators\"");
  doc.generators = vec_list_from_json(j["generators"]);
  doc.ambient_dim = doc.generators[0].size();
  for (const IntVec& g : doc.generators)
    if (g.size() != doc.ambient_dim)
      throw std::invalid_argument("generators have mixed dimensions");
  if (j.contains("subsemigroup")) {
    doc.subsemigroup = vec_list_from_json(j["subsemigroup"]);
    for (const IntVec& g : *doc.subsemigroup)
      if (g.size() != doc.ambient_dim)
        throw std::invalid_argument("subsemigroup has mixed dimensions");
  }
  if (j.contains("char")) {
    if (!j["char"].is_number_integer() || j["char"].get<long>() < 0)
      throw std::invalid_argument("char must be a nonnegative integer");
    doc.field_char = j["char"].get<unsigned long>();
  }
  return doc;
}

OrderedJson semigroup_document_json(const SemigroupDocument& doc) {
  OrderedJson j;
  j["format_version"] = 1;
  j["generators"] = vec_list_json(doc.generators);
  if (doc.subsemigroup) j["subsemigroup"] = vec_list_json(*doc.subsemigroup);
  j["char"] = doc.field_char;
  return j;
}

OrderedJson decomposition_json(const Decomposition& dec,
                               unsigned long field_char) {
  OrderedJson j;
  j["format_version"] = 1;
  j["command"] = "decompose";
  j["char"] = field_char;
  j["base"] = {{"generators", vec_list_json(dec.base.generators())}};
  j["total"] = {{"generators", vec_list_json(dec.total.generators())}};

  const Field q;
  MonomialOrder order = MonomialOrder::degrevlex();
  GroebnerBasis rel = toric_ideal(dec.base, order).gb;
  std::vector<std::string> vars = default_var_names(dec.base.count());
  OrderedJson rels = OrderedJson::array();
  for (const Poly& g : rel.gens) rels.push_back(g.str(vars));
  j["base_relations"] = rels;

  OrderedJson quot;
  OrderedJson factors = OrderedJson::array();
  for (const Int& f : dec.quotient.invariant_factors())
    factors.push_back(json_int(f));
  quot["invariant_factors"] = factors;
  quot["order"] = json_int(dec.quotient.order());
  j["quotient"] = quot;

  OrderedJson comps = OrderedJson::array();
  for (const DecompositionComponent& c : dec.components) {
    OrderedJson cj;
    cj["class"] = json_vec(c.class_label);
    cj["gamma"] = vec_list_json(c.gamma);
    cj["representative"] = json_vec(c.gamma.front());
    cj["shift"] = json_vec(c.shift);
    OrderedJson ideal;
    ideal["exponents"] = vec_list_json(c.ideal_exponents);
    OrderedJson monomials = OrderedJson::array();
    for (const IntVec& e : c.ideal_exponents) {
      Monomial m = Monomial::one(dec.base.count());
      for (std::size_t k = 0; k < e.size(); ++k)
        m.e[k] = static_cast<int>(e[k].get_si());
      monomials.push_back(monomial_str(m, vars));
    }
    ideal["monomials"] = monomials;
    ideal["ambient"] = vec_list_json(c.ambient_exponents);
    cj["ideal"] = ideal;
    cj["c_vectors"] = vec_list_json(c.c_vectors);
    comps.push_back(cj);
  }
  j["components"] = comps;
  return j;
}

OrderedJson property_report_json(const PropertyReport& rep,
                                 unsigned long field_char) {
  OrderedJson j;
  j["format_version"] = 1;
  j["command"] = "props";
  j["char"] = field_char;
  j["depth"] = rep.depth;
  j["cohen_macaulay"] = rep.cohen_macaulay;
  j["gorenstein"] = rep.gorenstein;
  j["buchsbaum"] = rep.buchsbaum;
  j["normal"] = rep.normal;
  j["seminormal"] = rep.seminormal;
  OrderedJson w = OrderedJson::array();
  for (const PropertyWitness& x : rep.witnesses)
    w.push_back({{"property", x.property}, {"detail", x.detail}});
  j["witnesses"] = w;
  return j;
}

OrderedJson regularity_json(const RegularityResult& res) {
  OrderedJson j;
  j["format_version"] = 1;
  j["command"] = "reg";
  j["char"] = res.field_char;
  j["reg"] = res.reg;
  j["dim"] = res.dim;
  j["codim"] = res.codim;
  j["degree"] = json_int(res.degree);
  j["path"] = res.path;
  OrderedJson pc = OrderedJson::array();
  for (const PerClassReg& c : res.per_class) {
    OrderedJson cj;
    cj["class"] = json_vec(c.class_label);
    cj["reg_ideal"] = c.reg_ideal;
    cj["shift_degree"] = c.shift_degree;
    pc.push_back(cj);
  }
  j["per_class"] = pc;
  return j;
}

}  // namespace semalg
