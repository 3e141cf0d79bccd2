#pragma once

// JSON and dense text formats. Output uses insertion-ordered objects so the
// same input always serializes to the same bytes.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vlic/code.hpp"
#include "vlic/error.hpp"
#include "vlic/extension.hpp"
#include "vlic/gf2.hpp"
#include "vlic/problem.hpp"
#include "vlic/verifier.hpp"

namespace vlic::io {

using Json = nlohmann::ordered_json;

inline Json parse_json(const std::string& text, const std::string& where = "input") {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(Errc::parse, where + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json load_json(const std::string& path) { return parse_json(read_file(path), path); }

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace detail {

/// Runs a conversion, turning JSON type errors into Errc::parse.
template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::parse, what + ": " + e.what());
  }
}

inline const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::parse, what + ": missing field \"" + key + "\"");
  return j.at(key);
}

}  // namespace detail

// ---- labels ----

inline Json to_json(const ComponentLabel& c) { return Json::array({c.message, c.component}); }

inline ComponentLabel label_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw Error(Errc::parse, "column label must be [k, i], got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

inline Json labels_to_json(const std::vector<ComponentLabel>& labels) {
  Json a = Json::array();
  for (const auto& c : labels) a.push_back(to_json(c));
  return a;
}

inline std::vector<ComponentLabel> labels_from_json(const Json& j) {
  if (!j.is_array()) throw Error(Errc::parse, "row must be a list of labels, got " + j.dump());
  std::vector<ComponentLabel> out;
  for (const auto& c : j) out.push_back(label_from_json(c));
  return out;
}

// ---- problem ----

inline Json to_json(const ProblemSpec& p) {
  Json j;
  j["K"] = p.K;
  j["wants"] = p.wants;
  j["antidotes"] = p.antidotes;
  j["label"] = p.label;
  return j;
}

inline ProblemSpec problem_from_json(const Json& j) {
  ProblemSpec p = detail::guarded("problem", [&] {
    ProblemSpec p;
    p.K = detail::field(j, "K", "problem").get<int>();
    p.wants = detail::field(j, "wants", "problem").get<std::vector<int>>();
    p.antidotes = detail::field(j, "antidotes", "problem").get<std::vector<std::vector<int>>>();
    if (j.contains("label")) p.label = j.at("label").get<std::string>();
    return p;
  });
  for (auto& a : p.antidotes) std::sort(a.begin(), a.end());
  try {
    p.validate();
  } catch (const Error& e) {
    throw Error(Errc::parse, std::string("problem: ") + e.what());
  }
  return p;
}

// ---- codes ----

inline Json to_json(const LinearCode& code) {
  Json j;
  j["K"] = code.K();
  j["t"] = code.t();
  Json rows = Json::array();
  for (std::size_t r = 0; r < code.length(); ++r) rows.push_back(labels_to_json(code.row_labels(r)));
  j["rows"] = std::move(rows);
  return j;
}

inline GoldenCode golden_from_json(const Json& j, std::string id = {}) {
  return detail::guarded("code", [&] {
    GoldenCode g;
    g.K = detail::field(j, "K", "code").get<int>();
    g.t = j.contains("t") ? j.at("t").get<int>() : 1;
    g.id = j.contains("id") ? j.at("id").get<std::string>() : std::move(id);
    const Json& rows = detail::field(j, "rows", "code");
    if (!rows.is_array()) throw Error(Errc::parse, "code: \"rows\" must be a list");
    for (const auto& r : rows) g.rows.push_back(labels_from_json(r));
    return g;
  });
}

/// Code JSON; labels must already lie in range.
inline LinearCode code_from_json(const Json& j) {
  const GoldenCode g = golden_from_json(j);
  try {
    return LinearCode::from_rows(g.K, g.t, g.rows);
  } catch (const Error& e) {
    throw Error(Errc::parse, std::string("code: ") + e.what());
  }
}

/// Dense text: one line of 0/1 characters per symbol.
inline std::string to_matrix_text(const LinearCode& code) { return code.symbols().to_string(); }

/// Reads the dense text format. Blank lines and lines starting with '#' are
/// skipped. The width must be K*t.
inline LinearCode code_from_matrix_text(const std::string& text, int t = 1) {
  std::istringstream in(text);
  std::string line;
  std::vector<gf2::BitVector> rows;
  std::size_t width = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.find_first_not_of("01") != std::string::npos) {
      throw Error(Errc::parse, "matrix line " + std::to_string(line_no) + ": expected only 0 and 1");
    }
    if (rows.empty()) width = line.size();
    if (line.size() != width) {
      throw Error(Errc::parse, "matrix line " + std::to_string(line_no) + ": width " + std::to_string(line.size()) +
                                   ", expected " + std::to_string(width));
    }
    rows.push_back(gf2::BitVector::from_string(line));
  }
  if (rows.empty()) throw Error(Errc::parse, "matrix: no rows");
  if (t < 1 || width % static_cast<std::size_t>(t) != 0) {
    throw Error(Errc::parse, "matrix width " + std::to_string(width) + " is not a multiple of t=" + std::to_string(t));
  }
  try {
    return LinearCode(static_cast<int>(width) / t, t, gf2::BitMatrix::from_rows(std::move(rows), width));
  } catch (const Error& e) {
    throw Error(Errc::parse, std::string("matrix: ") + e.what());
  }
}

/// Accepts either format: JSON if the first non-blank character is '{'.
inline LinearCode code_from_text(const std::string& text, const std::string& where, int t = 1) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return code_from_json(parse_json(text, where));
    } catch (const Error& e) {
      throw Error(Errc::parse, where + ": " + e.what());
    }
  }
  try {
    return code_from_matrix_text(text, t);
  } catch (const Error& e) {
    throw Error(Errc::parse, where + ": " + e.what());
  }
}

// ---- golden data ----

struct ManifestEntry {
  std::string id;
  std::string file;
  int cls = 0;
  int K = 0;
  int delta = 0;
  std::optional<int> lambda;
  int U = 0;
  std::optional<Rational> printed_capacity;
  std::string capacity_note;
};

inline std::vector<ManifestEntry> manifest_from_json(const Json& j) {
  return detail::guarded("manifest", [&] {
    if (!j.is_array()) throw Error(Errc::parse, "manifest must be a list");
    std::vector<ManifestEntry> out;
    for (const auto& e : j) {
      ManifestEntry m;
      m.id = detail::field(e, "id", "manifest").get<std::string>();
      m.file = detail::field(e, "file", "manifest").get<std::string>();
      m.cls = detail::field(e, "class", "manifest").get<int>();
      m.K = detail::field(e, "K", "manifest").get<int>();
      m.delta = detail::field(e, "delta", "manifest").get<int>();
      if (e.contains("lambda") && !e.at("lambda").is_null()) m.lambda = e.at("lambda").get<int>();
      m.U = e.value("U", 0);
      if (e.contains("printed_capacity") && !e.at("printed_capacity").is_null()) {
        m.printed_capacity = Rational::parse(e.at("printed_capacity").get<std::string>());
      }
      m.capacity_note = e.value("capacity_note", std::string());
      out.push_back(std::move(m));
    }
    return out;
  });
}

inline Json to_json(const Erratum& e) {
  Json j;
  j["example"] = e.example;
  j["row"] = e.row;
  j["printed"] = labels_to_json(e.printed);
  j["normalized"] = labels_to_json(e.normalized);
  j["note"] = e.note;
  return j;
}

inline std::vector<Erratum> errata_from_json(const Json& j) {
  return detail::guarded("errata", [&] {
    if (!j.is_array()) throw Error(Errc::parse, "errata must be a list");
    std::vector<Erratum> out;
    for (const auto& e : j) {
      Erratum x;
      x.example = detail::field(e, "example", "errata").get<std::string>();
      x.row = detail::field(e, "row", "errata").get<std::size_t>();
      x.printed = labels_from_json(detail::field(e, "printed", "errata"));
      x.normalized = labels_from_json(detail::field(e, "normalized", "errata"));
      x.note = e.value("note", std::string());
      out.push_back(std::move(x));
    }
    return out;
  });
}

// ---- schedules ----

inline Json to_json(const DecodingSchedule& s) {
  Json j;
  j["K"] = s.K;
  j["U"] = s.U;
  j["t"] = s.block();
  j["code"] = to_json(s.code);
  j["problem"] = to_json(s.problem);
  Json receivers = Json::array();
  for (int k = 1; k <= s.K; ++k) {
    Json steps = Json::array();
    for (const auto& st : s.steps_of(k)) {
      Json o;
      o["sum_index"] = st.sum_index;
      o["coeffs"] = st.coeffs.to_string();
      o["cancel"] = labels_to_json(st.cancel);
      o["side"] = labels_to_json(st.side);
      o["recovers"] = to_json(st.recovers);
      steps.push_back(std::move(o));
    }
    Json r;
    r["receiver"] = k;
    r["steps"] = std::move(steps);
    receivers.push_back(std::move(r));
  }
  j["receivers"] = std::move(receivers);
  return j;
}

inline DecodingSchedule schedule_from_json(const Json& j) {
  return detail::guarded("schedule", [&] {
    DecodingSchedule s;
    s.K = detail::field(j, "K", "schedule").get<int>();
    s.U = detail::field(j, "U", "schedule").get<int>();
    s.code = code_from_json(detail::field(j, "code", "schedule"));
    s.problem = problem_from_json(detail::field(j, "problem", "schedule"));
    if (s.code.K() != s.K || s.problem.K != s.K || s.code.t() != s.U + 1) {
      throw Error(Errc::parse, "schedule: K/U disagree with the embedded code or problem");
    }
    for (const auto& r : detail::field(j, "receivers", "schedule")) {
      auto& steps = s.receivers.emplace_back();
      for (const auto& o : detail::field(r, "steps", "schedule")) {
        DecodingStep st;
        st.sum_index = detail::field(o, "sum_index", "schedule step").get<int>();
        const auto bits = detail::field(o, "coeffs", "schedule step").get<std::string>();
        if (bits.size() != s.code.length() || bits.find_first_not_of("01") != std::string::npos) {
          throw Error(Errc::parse, "schedule step: coeffs must be " + std::to_string(s.code.length()) + " bits");
        }
        st.coeffs = gf2::BitVector::from_string(bits);
        st.cancel = labels_from_json(detail::field(o, "cancel", "schedule step"));
        if (o.contains("side")) st.side = labels_from_json(o.at("side"));
        st.recovers = label_from_json(detail::field(o, "recovers", "schedule step"));
        steps.push_back(std::move(st));
      }
    }
    if (s.receivers.size() != static_cast<std::size_t>(s.K)) {
      throw Error(Errc::parse, "schedule: expected " + std::to_string(s.K) + " receivers");
    }
    return s;
  });
}

// ---- reports ----

inline Json to_json(const VerificationReport& r) {
  Json j;
  j["problem"] = r.problem_id;
  j["code"] = r.code_id;
  j["decodable"] = r.decodable;
  Json recv = Json::array();
  for (const auto& x : r.receivers) {
    Json o;
    o["receiver"] = x.receiver;
    o["decodable"] = x.decodable;
    Json w = Json::array();
    for (const auto& c : x.witnesses) w.push_back(c.to_string());
    o["witnesses"] = std::move(w);
    if (!x.missing.empty()) o["missing_components"] = x.missing;
    recv.push_back(std::move(o));
  }
  j["receivers"] = std::move(recv);
  j["rate"] = r.rate.to_string();
  j["capacity"] = r.capacity ? Json(r.capacity->to_string()) : Json(nullptr);
  j["optimal"] = r.optimal;
  j["notes"] = r.notes;
  return j;
}

inline Json to_json(const GoldenDiff& d) {
  Json j;
  j["id"] = d.id;
  j["identical"] = d.identical;
  j["accepted"] = d.accepted;
  Json a = Json::array();
  for (const auto& r : d.only_generated) a.push_back(labels_to_json(r));
  j["only_generated"] = std::move(a);
  Json b = Json::array();
  for (const auto& r : d.only_golden) b.push_back(labels_to_json(r));
  j["only_golden"] = std::move(b);
  Json e = Json::array();
  for (const auto& x : d.applied) e.push_back(to_json(x));
  j["errata"] = std::move(e);
  j["notes"] = d.notes;
  return j;
}

}  // namespace vlic::io
