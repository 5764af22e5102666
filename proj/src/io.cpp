#include "eiscomb/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace eiscomb::io {

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw InputError(source + ": " + where + ": " + what);
}

json parse_text(std::string_view text, const std::string& source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(source, "line " + std::to_string(line) + ", column " + std::to_string(col), "malformed JSON");
  }
}

const json& member(const json& obj, const char* key, const std::string& path, const std::string& source) {
  if (!obj.is_object()) fail(source, path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(source, path, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_label(const json& j, const std::string& path, const std::string& source) {
  if (!j.is_string()) fail(source, path, "expected a label string");
  return j.get<std::string>();
}

int label_index(const std::vector<std::string>& labels, const std::string& l, const std::string& path, const std::string& source) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<int>(i);
  fail(source, path, "unknown label '" + l + "'");
}

// [["a","b"], ...] as an involution, or "identity"
IndexMap parse_pairs(const json& j, const std::vector<std::string>& labels, const std::string& path, const std::string& source) {
  if (j.is_string() && j.get<std::string>() == "identity") return identity_map(labels.size());
  if (!j.is_array()) fail(source, path, "expected a list of label pairs");
  IndexMap c(labels.size(), -1);
  for (std::size_t p = 0; p < j.size(); ++p) {
    const std::string pp = path + "[" + std::to_string(p) + "]";
    if (!j[p].is_array() || j[p].size() != 2) fail(source, pp, "expected a pair of labels");
    const int a = label_index(labels, as_label(j[p][0], pp + "[0]", source), pp + "[0]", source);
    const int b = label_index(labels, as_label(j[p][1], pp + "[1]", source), pp + "[1]", source);
    if (c[a] != -1 || c[b] != -1) fail(source, pp, "label paired twice");
    c[a] = b;
    c[b] = a;
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] == -1) fail(source, path, "label '" + labels[i] + "' is not paired");
  return c;
}

// {"from": "to", ...} over all labels
IndexMap parse_map(const json& j, const std::vector<std::string>& from, const std::vector<std::string>& to, const std::string& path,
                   const std::string& source) {
  if (!j.is_object()) fail(source, path, "expected an object keyed by embedding label");
  IndexMap out(from.size(), -1);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string kp = path + "." + it.key();
    const int a = label_index(from, it.key(), kp, source);
    out[a] = label_index(to, as_label(it.value(), kp, source), kp, source);
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] == -1) fail(source, path, "no entry for label '" + from[i] + "'");
  return out;
}

json pairs_to_json(const IndexMap& c, const std::vector<std::string>& labels) {
  json out = json::array();
  bool identity = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != static_cast<int>(i)) identity = false;
    if (static_cast<int>(i) < c[i]) out.push_back(json::array({labels[i], labels[c[i]]}));
  }
  return identity ? json("identity") : out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModelFile parse_model(std::string_view text, const std::string& source) {
  const json j = parse_text(text, source);
  ModelFile out;
  FieldModel& m = out.model;
  const json& emb = member(j, "embeddings", "$", source);
  if (!emb.is_array() || emb.empty()) fail(source, "$.embeddings", "expected a nonempty list of labels");
  for (std::size_t i = 0; i < emb.size(); ++i) {
    const std::string p = "$.embeddings[" + std::to_string(i) + "]";
    const std::string l = as_label(emb[i], p, source);
    for (const auto& prev : m.embeddings)
      if (prev == l) fail(source, p, "duplicate label '" + l + "'");
    m.embeddings.push_back(l);
  }
  const json& conj = member(j, "conjugations", "$", source);
  if (!conj.is_array() || conj.empty()) fail(source, "$.conjugations", "expected a nonempty list");
  for (std::size_t c = 0; c < conj.size(); ++c)
    m.conjugations.push_back(parse_pairs(conj[c], m.embeddings, "$.conjugations[" + std::to_string(c) + "]", source));
  if (j.contains("distinguished_conjugation")) {
    const json& d = j["distinguished_conjugation"];
    if (!d.is_number_unsigned() || d.get<std::size_t>() >= m.conjugations.size())
      fail(source, "$.distinguished_conjugation", "expected an index into conjugations");
    m.distinguished_conjugation = d.get<std::size_t>();
  }
  if (j.contains("subfield")) {
    const json& s = j["subfield"];
    SubfieldLayer L;
    const json& labels = member(s, "labels", "$.subfield", source);
    if (!labels.is_array() || labels.empty()) fail(source, "$.subfield.labels", "expected a nonempty list of labels");
    for (std::size_t i = 0; i < labels.size(); ++i) L.labels.push_back(as_label(labels[i], "$.subfield.labels[" + std::to_string(i) + "]", source));
    L.restriction = parse_map(member(s, "restriction", "$.subfield", source), m.embeddings, L.labels, "$.subfield.restriction", source);
    L.conjugation = parse_pairs(member(s, "conjugation", "$.subfield", source), L.labels, "$.subfield.conjugation", source);
    m.layer = L;
  }
  if (j.contains("distinguished")) {
    const json& d = j["distinguished"];
    if (!d.is_array()) fail(source, "$.distinguished", "expected a list of labels");
    m.distinguished.assign(m.degree(), false);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::string p = "$.distinguished[" + std::to_string(i) + "]";
      m.distinguished[label_index(m.embeddings, as_label(d[i], p, source), p, source)] = true;
    }
  }
  if (j.contains("galois")) {
    const json& g = j["galois"];
    if (!g.is_array()) fail(source, "$.galois", "expected a list");
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::string p = "$.galois[" + std::to_string(i) + "]";
      GaloisElement e;
      e.name = as_label(member(g[i], "name", p, source), p + ".name", source);
      e.perm = parse_map(member(g[i], "perm", p, source), m.embeddings, m.embeddings, p + ".perm", source);
      if (!is_bijection(e.perm)) fail(source, p + ".perm", "not a permutation of the embeddings");
      out.galois.push_back(std::move(e));
    }
  }
  for (const auto& c : m.conjugations)
    if (c.size() != m.degree()) fail(source, "$.conjugations", "size mismatch");
  try {
    assign_default_flags(m);
  } catch (const std::exception& e) {
    fail(source, "$", e.what());
  }
  return out;
}

ModelFile load_model(const std::string& path) { return parse_model(read_file(path), path); }

json model_to_json(const FieldModel& m, const std::vector<GaloisElement>& galois) {
  json j;
  j["embeddings"] = m.embeddings;
  j["conjugations"] = json::array();
  for (const auto& c : m.conjugations) j["conjugations"].push_back(pairs_to_json(c, m.embeddings));
  j["distinguished_conjugation"] = m.distinguished_conjugation;
  if (!m.distinguished.empty()) {
    json d = json::array();
    for (std::size_t i = 0; i < m.degree(); ++i)
      if (m.distinguished[i]) d.push_back(m.embeddings[i]);
    j["distinguished"] = d;
  }
  if (m.layer) {
    json s;
    s["labels"] = m.layer->labels;
    json r = json::object();
    for (std::size_t i = 0; i < m.degree(); ++i) r[m.embeddings[i]] = m.layer->labels[m.layer->restriction[i]];
    s["restriction"] = r;
    s["conjugation"] = pairs_to_json(m.layer->conjugation, m.layer->labels);
    j["subfield"] = s;
  }
  if (!galois.empty()) {
    j["galois"] = json::array();
    for (const auto& g : galois) {
      json p = json::object();
      for (std::size_t i = 0; i < m.degree(); ++i) p[m.embeddings[i]] = m.embeddings[g.perm[i]];
      j["galois"].push_back({{"name", g.name}, {"perm", p}});
    }
  }
  return j;
}

Weight parse_weight(std::string_view text, const FieldModel& m, const std::string& source) {
  const json j = parse_text(text, source);
  const json& n = member(j, "n", "$", source);
  if (!n.is_number_integer() || n.get<int>() < 1) fail(source, "$.n", "expected a positive integer");
  Weight w{n.get<int>(), std::vector<Tuple>(m.degree())};
  const json& comp = member(j, "components", "$", source);
  if (!comp.is_object()) fail(source, "$.components", "expected an object keyed by embedding label");
  std::vector<bool> seen(m.degree(), false);
  for (auto it = comp.begin(); it != comp.end(); ++it) {
    const std::string p = "$.components." + it.key();
    const int e = label_index(m.embeddings, it.key(), p, source);
    const json& v = it.value();
    if (!v.is_array() || static_cast<int>(v.size()) != w.n) fail(source, p, "expected " + std::to_string(w.n) + " integers");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_number_integer()) fail(source, p + "[" + std::to_string(i) + "]", "expected an integer");
      w.comp[e].push_back(v[i].get<std::int64_t>());
    }
    seen[e] = true;
  }
  for (std::size_t e = 0; e < m.degree(); ++e)
    if (!seen[e]) fail(source, "$.components", "no entry for embedding '" + m.embeddings[e] + "'");
  return w;
}

Weight load_weight(const std::string& path, const FieldModel& m) { return parse_weight(read_file(path), m, path); }

json weight_to_json(const Weight& w, const FieldModel& m) {
  json c = json::object();
  for (std::size_t e = 0; e < w.degree(); ++e) c[m.embeddings[e]] = w.comp[e];
  return {{"n", w.n}, {"components", c}};
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const Half& h) { return h.str(); }

json to_json(const PiRational& x) {
  if (x.is_pole()) return {{"pole", true}};
  json j;
  j["value"] = x.str();
  j["odd_part"] = x.odd_part().str();
  j["two_exponent"] = x.two_exponent().str();
  j["pi_exponent"] = x.pi_exponent().str();
  if ((x.two_exponent() - x.pi_exponent()).is_integer()) j["two_pi_coefficient"] = x.two_pi_coefficient().str();
  return j;
}

json to_json(const Kappa& k) { return k.k; }

json to_json(const KostantRep& w, const FieldModel& m) {
  json j = json::object();
  for (std::size_t e = 0; e < w.comp.size(); ++e)
    j[m.embeddings[e]] = {{"kappa", w.comp[e].k}, {"length", kappa_length(w.comp[e])}};
  return j;
}

json to_json(const WidthData& wd) {
  json j;
  j["n"] = wd.n;
  j["n_prime"] = wd.np;
  j["purity_weight"] = wd.pw;
  j["purity_weight_prime"] = wd.pwp;
  j["a"] = wd.a.str();
  j["ell"] = wd.ell;
  j["places"] = json::array();
  for (const auto& p : wd.places)
    j["places"].push_back({{"grid", p.grid}, {"r", p.r}, {"t", p.t}, {"L", p.L}, {"delta", p.delta}});
  return j;
}

json to_json(const CriticalSet& cs) {
  if (cs.empty) return {{"empty", true}, {"points", json::array()}};
  json pts = json::array();
  for (Half x : cs.points()) pts.push_back(x.str());
  return {{"empty", false}, {"lower", cs.lower.str()}, {"upper", cs.upper.str()}, {"points", pts}};
}

json to_json(const SignatureReport& r) {
  json j;
  j["gamma"] = r.gamma;
  j["case"] = to_string(r.field_case);
  j["eps_direct"] = r.eps_direct;
  j["eps_formula"] = r.eps_formula;
  j["eps_input_order"] = r.eps_input_order;
  j["eps_pi_1inf"] = r.eps_1inf;
  j["J"] = r.J;
  j["fiber_signs"] = r.fiber_signs;
  j["eps_associate"] = r.eps_associate;
  j["product"] = r.product;
  j["eps_pi_prime_pow_nnp"] = r.pi_prime_power;
  j["formula_ok"] = r.formula_ok();
  j["product_ok"] = r.product_ok();
  return j;
}

}  // namespace eiscomb::io
