#include "instab/json_io.hpp"

namespace instab {

namespace {

long field_int(const Json& j, const std::string& field) {
  if (!j.contains(field)) throw std::invalid_argument(field + ": missing");
  const Json& v = j.at(field);
  if (!v.is_number_integer()) throw std::invalid_argument(field + ": expected an integer");
  return v.get<long>();
}

BigInt json_to_big(const Json& v, const std::string& field) {
  if (v.is_number_integer()) return BigInt(v.get<long>());
  if (v.is_string()) return BigInt(v.get<std::string>());
  throw std::invalid_argument(field + ": expected an integer or integer string");
}

}  // namespace

Json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

State state_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("state: expected a JSON object");
  long n = field_int(j, "n");
  long p = j.contains("p") ? field_int(j, "p") : 0;
  if (!j.contains("weights") || !j.at("weights").is_array())
    throw std::invalid_argument("weights: expected an array of integer vectors");
  std::vector<Weight> weights;
  for (std::size_t i = 0; i < j.at("weights").size(); ++i) {
    const Json& row = j.at("weights")[i];
    if (!row.is_array())
      throw std::invalid_argument("weights[" + std::to_string(i) + "]: expected an array");
    Weight w;
    for (const Json& v : row) {
      if (!v.is_number_integer())
        throw std::invalid_argument("weights[" + std::to_string(i) + "]: expected integers");
      w.push_back(v.get<long>());
    }
    weights.push_back(std::move(w));
  }
  return make_state(static_cast<int>(n), std::move(weights), p);
}

Json state_to_json(const State& s) {
  Json j;
  j["n"] = s.n;
  if (s.characteristic != 0) j["p"] = s.characteristic;
  Json rows = Json::array();
  for (const Weight& w : s.weights) rows.push_back(w);
  j["weights"] = std::move(rows);
  return j;
}

RepSpec rep_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("rep: expected a JSON object");
  RepSpec spec;
  spec.n = static_cast<int>(field_int(j, "n"));
  spec.m = static_cast<int>(field_int(j, "m"));
  spec.p = field_int(j, "p");
  if (spec.n < 1 || spec.m < 1) throw std::invalid_argument("n, m: must be at least 1");
  if (!j.contains("entries") || !j.at("entries").is_array() ||
      j.at("entries").size() != static_cast<std::size_t>(spec.m))
    throw std::invalid_argument("entries: expected an m x m array");
  int nv = spec.n * spec.n;
  spec.entries.assign(spec.m, std::vector<Poly>(spec.m, Poly(nv, spec.p)));
  spec.denom.assign(spec.m, std::vector<int>(spec.m, 0));
  for (int i = 0; i < spec.m; ++i) {
    const Json& row = j.at("entries")[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(spec.m))
      throw std::invalid_argument("entries[" + std::to_string(i) + "]: expected m entries");
    for (int k = 0; k < spec.m; ++k) {
      const Json& entry = row[k];
      std::string where = "entries[" + std::to_string(i) + "][" + std::to_string(k) + "]";
      if (!entry.is_array()) throw std::invalid_argument(where + ": expected a term list");
      Poly f(nv, spec.p);
      for (const Json& term : entry) {
        if (!term.is_array() || term.size() != 2 || !term[1].is_array() ||
            term[1].size() != static_cast<std::size_t>(nv))
          throw std::invalid_argument(where + ": each term is [coeff, [" + std::to_string(nv) +
                                      " exponents]]");
        std::vector<int> exps;
        for (const Json& e : term[1]) {
          if (!e.is_number_integer() || e.get<long>() < 0)
            throw std::invalid_argument(where + ": exponents must be nonnegative integers");
          exps.push_back(e.get<int>());
        }
        f.add_term(std::move(exps), json_to_big(term[0], where));
      }
      spec.entries[i][k] = std::move(f);
    }
  }
  if (j.contains("denom")) {
    const Json& denom = j.at("denom");
    if (!denom.is_array() || denom.size() != static_cast<std::size_t>(spec.m))
      throw std::invalid_argument("denom: expected an m x m array");
    for (int i = 0; i < spec.m; ++i) {
      const Json& row = denom[i];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(spec.m))
        throw std::invalid_argument("denom[" + std::to_string(i) + "]: expected m entries");
      for (int k = 0; k < spec.m; ++k) {
        if (!row[k].is_number_integer() || row[k].get<long>() < 0)
          throw std::invalid_argument("denom[" + std::to_string(i) +
                                      "]: exponents must be nonnegative integers");
        spec.denom[i][k] = row[k].get<int>();
      }
    }
  }
  validate_rep(spec);
  return spec;
}

Json rep_to_json(const RepSpec& spec) {
  Json j;
  j["n"] = spec.n;
  j["m"] = spec.m;
  j["p"] = spec.p;
  Json entries = Json::array();
  for (int i = 0; i < spec.m; ++i) {
    Json row = Json::array();
    for (int k = 0; k < spec.m; ++k) {
      Json terms = Json::array();
      for (const auto& [exps, coeff] : spec.entries[i][k].terms())
        terms.push_back(Json::array({big_to_json(coeff), Json(exps)}));
      row.push_back(std::move(terms));
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["denom"] = spec.denom;
  return j;
}

SplitBundle bundle_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("bundle: expected a JSON object");
  long p = j.contains("p") ? field_int(j, "p") : 0;
  if (!j.contains("degrees") || !j.at("degrees").is_array())
    throw std::invalid_argument("degrees: expected an array of integers");
  std::vector<long> degrees;
  for (const Json& v : j.at("degrees")) {
    if (!v.is_number_integer()) throw std::invalid_argument("degrees: expected integers");
    degrees.push_back(v.get<long>());
  }
  return make_bundle(p, std::move(degrees));
}

Json bundle_to_json(const SplitBundle& e) {
  Json j;
  j["p"] = e.p;
  j["degrees"] = e.degrees;
  return j;
}

Json report_to_json(const InstabilityReport& report) {
  Json j;
  j["semistable"] = report.semistable;
  Json point = Json::array();
  for (const Rat& c : report.min_norm_point) point.push_back(rat_str(c));
  j["min_norm_point"] = std::move(point);
  j["mu_sq"] = rat_str(report.mu_sq);
  if (!report.semistable) {
    j["lambda"] = *report.lambda;
    j["m"] = big_to_json(report.m);
    Json parabolic;
    parabolic["block_sizes"] = report.parabolic->block_sizes;
    Json pattern = Json::array();
    for (const auto& [a, b] : report.parabolic->zero_pattern) pattern.push_back(Json::array({a, b}));
    parabolic["zero_pattern"] = std::move(pattern);
    j["parabolic"] = std::move(parabolic);
  }
  return j;
}

Json bound_to_json(const BoundResult& result) {
  Json j;
  j["n_min"] = big_to_json(result.n_min);
  Json witness = Json::object();
  if (result.witness_l) witness["l"] = *result.witness_l;
  if (result.witness_r) witness["r"] = *result.witness_r;
  j["witness"] = std::move(witness);
  Json cert;
  cert["exact"] = result.certificate.exact;
  cert["base"] = big_to_json(result.certificate.base);
  cert["exponent"] = big_to_json(result.certificate.exponent);
  if (result.certificate.exact) {
    cert["p_power"] = big_to_json(result.certificate.p_power);
    cert["target"] = big_to_json(result.certificate.target);
    if (result.n_min > 0) cert["p_power_prev"] = big_to_json(result.certificate.p_power_prev);
  } else {
    cert["log_precision"] = static_cast<long>(result.certificate.log_precision);
  }
  j["certificate"] = std::move(cert);
  return j;
}

}  // namespace instab
