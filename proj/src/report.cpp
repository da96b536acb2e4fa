#include "rateig/report.hpp"

#include <sstream>

#include <json.hpp>

#include "rateig/error.hpp"

namespace rateig {

namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

template <typename F>
auto reading(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

void check_version(const json& j) {
  if (j.at("report_version").get<int>() != kReportVersion) {
    throw Error(ErrorCode::ParseError, "unsupported report_version");
  }
}

}  // namespace

std::string to_json(const VerificationReport& r) {
  json j;
  j["report_version"] = kReportVersion;
  j["theorem"] = std::string(theorem_name(r.theorem));
  j["bounds"] = {{"rank_lo", r.bounds.rank_lo},
                 {"rank_hi", r.bounds.rank_hi},
                 {"max_order", r.bounds.max_order},
                 {"p", r.bounds.p}};
  j["elements_checked"] = r.elements_checked;
  j["cases_checked"] = r.cases_checked;
  j["cases_skipped"] = r.cases_skipped;
  j["passed"] = r.passed();
  j["mismatches"] = json::array();
  for (const Mismatch& m : r.mismatches) {
    j["mismatches"].push_back({{"element", m.element},
                               {"weight", m.weight},
                               {"kind", m.kind},
                               {"predicted", m.predicted},
                               {"computed", m.computed}});
  }
  j["exceptions"] = json::array();
  for (const ExceptionCase& e : r.exceptions) {
    j["exceptions"].push_back({{"element", e.element}, {"weight", e.weight}, {"anchor", e.anchor}});
  }
  j["table"] = json::array();
  for (const TableRow& t : r.table) {
    j["table"].push_back({{"anchor", t.anchor}, {"instances", t.instances}, {"hits", t.hits}});
  }
  j["checks"] = json::array();
  for (const CheckTally& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}});
  }
  j["findings"] = r.findings;
  j["wall_time"] = r.wall_time ? json(*r.wall_time) : json(nullptr);
  return dump(j);
}

VerificationReport verification_report_from_json(std::string_view text) {
  const json j = parse(text);
  return reading([&] {
    check_version(j);
    VerificationReport r;
    const auto id = parse_theorem(j.at("theorem").get<std::string>());
    if (!id) throw Error(ErrorCode::ParseError, "unknown theorem in report");
    r.theorem = *id;
    const json& b = j.at("bounds");
    r.bounds = {b.at("rank_lo").get<std::uint32_t>(), b.at("rank_hi").get<std::uint32_t>(),
                b.at("max_order").get<std::uint32_t>(), b.at("p").get<std::uint32_t>()};
    r.elements_checked = j.at("elements_checked").get<std::uint64_t>();
    r.cases_checked = j.at("cases_checked").get<std::uint64_t>();
    r.cases_skipped = j.at("cases_skipped").get<std::uint64_t>();
    for (const json& m : j.at("mismatches")) {
      r.mismatches.push_back({m.at("element"), m.at("weight"), m.at("kind"), m.at("predicted"),
                              m.at("computed")});
    }
    for (const json& e : j.at("exceptions")) {
      r.exceptions.push_back({e.at("element"), e.at("weight"), e.at("anchor")});
    }
    for (const json& t : j.at("table")) {
      r.table.push_back({t.at("anchor"), t.at("instances"), t.at("hits")});
    }
    for (const json& c : j.at("checks")) {
      r.checks.push_back({c.at("name"), c.at("passed"), c.at("failed")});
    }
    r.findings = j.at("findings").get<std::vector<std::string>>();
    if (!j.at("wall_time").is_null()) r.wall_time = j.at("wall_time").get<double>();
    if (j.at("passed").get<bool>() != r.passed()) {
      throw Error(ErrorCode::ParseError, "report 'passed' disagrees with its contents");
    }
    return r;
  });
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "theorem " << theorem_name(r.theorem) << "\n"
      << "bounds: ranks " << r.bounds.rank_lo << ".." << r.bounds.rank_hi << ", max order "
      << r.bounds.max_order << ", p " << r.bounds.p << "\n"
      << "elements " << r.elements_checked << ", cases " << r.cases_checked << ", skipped "
      << r.cases_skipped << "\n";
  if (!r.table.empty()) {
    out << "table:\n";
    for (const TableRow& t : r.table) {
      out << "  " << t.anchor << "  instances=" << t.instances << " hits=" << t.hits
          << (t.hits != t.instances ? "  MISMATCH" : "") << (t.instances == 0 ? "  (none in window)" : "")
          << "\n";
    }
  }
  for (const CheckTally& c : r.checks) {
    out << "check: " << c.name << "  passed=" << c.passed << " failed=" << c.failed << "\n";
  }
  out << "exceptions: " << r.exceptions.size() << "\n";
  for (const ExceptionCase& e : r.exceptions) {
    out << "  " << e.element << "  " << e.weight << "  [" << e.anchor << "]\n";
  }
  out << "mismatches: " << r.mismatches.size() << "\n";
  for (const Mismatch& m : r.mismatches) {
    out << "  " << m.element << "  " << m.weight << "  " << m.kind << ": predicted "
        << m.predicted << ", computed " << m.computed << "\n";
  }
  for (const std::string& f : r.findings) out << "finding: " << f << "\n";
  out << "note: verified over the window above only\n";
  if (r.wall_time) out << "wall time " << *r.wall_time << " s\n";
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string to_json(const LemmaReport& r) {
  json j;
  j["report_version"] = kReportVersion;
  j["max_m"] = r.max_m;
  j["passed"] = r.passed();
  j["identities"] = json::array();
  for (const IdentityResult& i : r.identities) {
    j["identities"].push_back({{"id", i.id},
                               {"statement", i.statement},
                               {"checked", i.checked},
                               {"failures", i.failures}});
  }
  return dump(j);
}

LemmaReport lemma_report_from_json(std::string_view text) {
  const json j = parse(text);
  return reading([&] {
    check_version(j);
    LemmaReport r;
    r.max_m = j.at("max_m").get<std::uint32_t>();
    for (const json& i : j.at("identities")) {
      r.identities.push_back({i.at("id"), i.at("statement"), i.at("checked"),
                              i.at("failures").get<std::vector<std::string>>()});
    }
    if (j.at("passed").get<bool>() != r.passed()) {
      throw Error(ErrorCode::ParseError, "report 'passed' disagrees with its contents");
    }
    return r;
  });
}

std::string to_text(const LemmaReport& r) {
  std::ostringstream out;
  out << "identities for odd m <= " << r.max_m << "\n";
  for (const IdentityResult& i : r.identities) {
    out << (i.passed() ? "  ok   " : "  FAIL ") << i.id << "  (" << i.checked << " checks)  "
        << i.statement << "\n";
    for (const std::string& f : i.failures) out << "         failed at " << f << "\n";
  }
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string element_json(const SemisimpleElement& g) {
  json j;
  j["family"] = std::string(1, family_letter(g.group().family));
  j["n"] = g.group().n;
  j["blocks"] = json::array();
  for (const OrbitBlock& b : g.blocks()) j["blocks"].push_back({b.m, b.count});
  j["trivial_count"] = g.trivial_count();
  j["order"] = g.order();
  return dump(j);
}

std::string to_json(const SpectrumPrintout& s) {
  json j;
  j["report_version"] = kReportVersion;
  j["element"] = s.element;
  j["weight"] = s.weight;
  j["p"] = s.p;
  j["mod"] = s.spectrum.values.modulus();
  j["residues"] = s.spectrum.values.residues();
  j["has_one"] = has_eigenvalue_one(s.spectrum);
  j["is_full"] = s.spectrum.values.is_full();
  j["exact"] = s.spectrum.exact;
  j["spin_case"] = s.spectrum.spin_case ? json(s.spectrum.spin_case->to_string()) : json(nullptr);
  return dump(j);
}

std::string to_text(const SpectrumPrintout& s) {
  std::ostringstream out;
  out << s.spectrum.values.to_string() << "\n"
      << "has_one=" << (has_eigenvalue_one(s.spectrum) ? "true" : "false")
      << " is_full=" << (s.spectrum.values.is_full() ? "true" : "false")
      << " exact=" << (s.spectrum.exact ? "true" : "false") << "\n";
  if (s.spectrum.spin_case) out << "case " << s.spectrum.spin_case->to_string() << "\n";
  return out.str();
}

std::string to_json(const Si2Printout& s) {
  json j;
  j["report_version"] = kReportVersion;
  j["element"] = s.element;
  j["weight"] = s.weight;
  j["p"] = 2;
  j["si"] = s.si;
  j["delta"] = s.delta;
  j["has_one"] = s.has_one;
  return dump(j);
}

std::string to_text(const Si2Printout& s) {
  std::ostringstream out;
  out << "Si=" << s.si << " delta=" << s.delta << "\n"
      << "has_one=" << (s.has_one ? "true" : "false") << "\n";
  return out.str();
}

}  // namespace rateig
