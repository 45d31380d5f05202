#include "fucik/system_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fucik/errors.hpp"

namespace fucik {
namespace {

double number_field(const Json& obj, const char* key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) throw InputError(std::string("field '") + key + "' must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(std::string("field '") + key + "' must be finite");
  return d;
}

FucikPoint parse_entry(const Json& e) {
  if (!e.is_object()) throw InputError("each entry must be an object");
  if (!e.contains("n") || !e["n"].is_number_integer()) throw InputError("entry needs an integer 'n'");
  const int n = e["n"].get<int>();
  if (n < 1) throw InputError("entry index n must be >= 1");
  const bool has_alpha = e.contains("alpha");
  const bool has_beta = e.contains("beta");

  FucikPoint p{n, 1.0, 1.0};
  if (n == 1) {
    if (has_alpha) p.alpha = number_field(e, "alpha");
    if (has_beta) p.beta = number_field(e, "beta");
  } else if (has_alpha && has_beta) {
    p.alpha = number_field(e, "alpha");
    p.beta = number_field(e, "beta");
  } else if (has_alpha) {
    p.alpha = number_field(e, "alpha");
    p.beta = solve_beta(n, p.alpha);
  } else if (has_beta) {
    p.beta = number_field(e, "beta");
    p.alpha = solve_alpha(n, p.beta);
  } else {
    throw InputError("entry n = " + std::to_string(n) + " needs alpha or beta");
  }
  validate(p);
  return p;
}

Json method_record(const Contribution& c) {
  Json j;
  j["n"] = c.n;
  j["alpha"] = round12(c.point.alpha);
  j["beta"] = round12(c.point.beta);
  j["set"] = c.set == IndexSet::envelope ? "N" : "N*";
  j["method"] = to_string(c.method);
  j["value"] = round12(c.value);
  if (c.n % 2 == 0) j["gamma"] = round12(c.gamma);
  j["rho"] = round12(c.rho);
  return j;
}

}  // namespace

double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  std::ostringstream os;
  os.precision(12);
  os << v;
  return std::stod(os.str());
}

SplitRule parse_split(const std::string& text) {
  if (text == "default" || text.empty()) return {};
  if (text == "auto") return {SplitKind::automatic, {}};
  SplitRule rule{SplitKind::explicit_list, {}};
  std::istringstream is(text);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      std::size_t used = 0;
      const int n = std::stoi(tok, &used);
      if (used != tok.size()) throw InputError("bad split index '" + tok + "'");
      rule.indices.insert(n);
    } catch (const std::logic_error&) {
      throw InputError("bad split index '" + tok + "'");
    }
  }
  return rule;
}

Mode parse_mode(const std::string& text) {
  if (text == "theorem1") return Mode::theorem1;
  if (text == "remark") return Mode::remark;
  throw InputError("mode must be 'theorem1' or 'remark', got '" + text + "'");
}

SystemSpec parse_system_spec(const Json& doc) {
  if (!doc.is_object()) throw InputError("system spec must be a JSON object");
  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    throw InputError("system spec needs an 'entries' array");
  }
  SystemSpec spec;
  for (const auto& e : doc["entries"]) {
    const FucikPoint p = parse_entry(e);
    if (!spec.entries.emplace(p.n, p).second) {
      throw InputError("duplicate entry for n = " + std::to_string(p.n));
    }
  }
  if (doc.contains("split")) {
    const auto& s = doc["split"];
    if (s.is_string()) {
      const auto text = s.get<std::string>();
      if (text != "default" && text != "auto") throw InputError("split must be 'default', 'auto' or a list");
      spec.split = parse_split(text);
    } else if (s.is_array()) {
      spec.split.kind = SplitKind::explicit_list;
      for (const auto& v : s) {
        if (!v.is_number_integer()) throw InputError("split list must hold integers");
        spec.split.indices.insert(v.get<int>());
      }
    } else {
      throw InputError("split must be a string or a list");
    }
  }
  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw InputError("mode must be a string");
    spec.mode = parse_mode(doc["mode"].get<std::string>());
  }
  if (doc.contains("tail") && doc["tail"] != "identity") {
    throw InputError("only the identity tail rule is supported");
  }
  validate(spec);
  return spec;
}

SystemSpec parse_system_spec_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_system_spec(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("invalid system spec: ") + e.what());
  }
}

SystemSpec load_system_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open spec file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system_spec_text(buf.str());
}

Json serialize(const Certificate& cert) {
  Json j;
  j["mode"] = to_string(cert.mode);
  j["lambda_star_sq"] = round12(cert.lambda_star_sq);
  j["sup_gamma"] = round12(cert.sup_gamma);
  j["envelope_sq"] = round12(cert.envelope_sq);
  j["total"] = round12(cert.total);
  j["margin"] = round12(cert.margin());
  j["pass"] = cert.pass;
  j["verdict"] = cert.verdict();
  Json rows = Json::array();
  for (const auto& c : cert.per_index) rows.push_back(method_record(c));
  j["per_index"] = std::move(rows);
  return j;
}

Json serialize(const PiecewiseEigenfunction& f) {
  Json j;
  j["n"] = f.point().n;
  j["alpha"] = round12(f.point().alpha);
  j["beta"] = round12(f.point().beta);
  Json bumps = Json::array();
  for (const auto& b : f.bumps()) {
    Json r;
    r["sign"] = b.sign;
    r["start"] = round12(b.start);
    r["end"] = round12(b.end);
    r["frequency"] = round12(b.frequency);
    r["amplitude"] = round12(b.amplitude);
    bumps.push_back(std::move(r));
  }
  j["bumps"] = std::move(bumps);
  return j;
}

Json serialize(const GramWitness& w) {
  Json j;
  j["size"] = w.size;
  j["min_eig"] = round12(w.min_eig);
  j["max_eig"] = round12(w.max_eig);
  j["theta"] = round12(w.theta);
  j["certified"] = w.certified;
  j["lower_window"] = round12(w.lower_window);
  j["upper_window"] = round12(w.upper_window);
  j["cushion"] = w.cushion;
  j["inside_window"] = w.inside_window;
  j["note"] = "window derived from the Paley-Wiener inequality on a finite truncation";
  return j;
}

Json serialize(const EnvelopeEval& e) {
  Json j;
  j["gamma"] = round12(e.gamma);
  j["sqrt2_B1"] = round12(e.summands[0]);
  j["B2"] = round12(e.summands[1]);
  j["sqrt4_3_B3"] = round12(e.summands[2]);
  j["B4"] = round12(e.summands[3]);
  j["sqrt6_5_tail"] = round12(e.summands[4]);
  j["tail_method"] = e.tail_method == TailMethod::closed_form ? "closed-form" : "truncated-series";
  j["value"] = round12(e.value);
  return j;
}

}  // namespace fucik
