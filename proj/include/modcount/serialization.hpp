#ifndef MODCOUNT_SERIALIZATION_HPP
#define MODCOUNT_SERIALIZATION_HPP

#include <string>

#include <json.hpp>

#include "modcount/charsum.hpp"
#include "modcount/distribution.hpp"
#include "modcount/montecarlo.hpp"
#include "modcount/packing.hpp"
#include "modcount/random.hpp"
#include "modcount/subcount.hpp"

namespace modcount {

using Json = nlohmann::ordered_json;

Json to_json(const PackingReport& r);
Json to_json(const SamplerMetadata& meta);
Json to_json(const EmpiricalDist& dist);
Json to_json(const ExactDist& dist);
Json to_json(const XorBound& b);
Json to_json(const CharSumResult& r);
Json to_json(const LemmaCheck& c);
Json to_json(const DecayStudy& s);
Json to_json(const CorollaryReport& r);
Json to_json(const CorollarySplit& s);
Json to_json(const ExperimentConfig& cfg);

/// {"q": q, "m": m, "terms": [[coef, [var, ...]], ...]}
Json to_json(const CharPolynomial& poly);
CharPolynomial polynomial_from_json(const Json& j);

std::string decay_csv(const DecayStudy& s);

std::string to_string(const BigInt& v);

}  // namespace modcount

#endif
