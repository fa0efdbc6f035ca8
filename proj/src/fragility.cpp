#include "fanforge/fragility.hpp"

#include <sstream>

#include "fanforge/minors.hpp"
#include "fanforge/wheel_glue.hpp"

namespace fanforge {

std::optional<std::string> MinorSet::hypothesis_violation() const {
  for (const Matroid& m : members) {
    if (m.size() < 4)
      return "a member of S has fewer than four elements";
    if (!m.is_3connected()) return "a member of S is not 3-connected";
    if (is_wheel_or_whirl(m)) return "S contains a wheel or a whirl";
  }
  return std::nullopt;
}

bool has_S_minor(const Matroid& m, const MinorSet& s) {
  for (const Matroid& n : s.members)
    if (has_minor(m, n)) return true;
  return false;
}

FragilityVerdict is_S_fragile(const Matroid& m, const MinorSet& s) {
  FragilityVerdict out;
  out.fragile = true;
  for (int e = 0; e < m.size(); ++e) {
    FragilityVerdict::PerElement pe;
    pe.label = m.label(e);
    pe.delete_keeps = has_S_minor(m.deletion(bit(e)), s);
    pe.contract_keeps = has_S_minor(m.contraction(bit(e)), s);
    if (pe.delete_keeps && pe.contract_keeps) out.fragile = false;
    out.elements.push_back(std::move(pe));
  }
  return out;
}

std::string FragilityVerdict::report() const {
  std::ostringstream os;
  for (const auto& pe : elements)
    os << pe.label << ": del=" << (pe.delete_keeps ? "keeps" : "loses")
       << " con=" << (pe.contract_keeps ? "keeps" : "loses") << "\n";
  os << "fragile: " << (fragile ? "yes" : "no") << "\n";
  return os.str();
}

bool ClassPredicate::member(const Matroid& m) const {
  if (!s) return true;
  return is_S_fragile(m, *s).fragile;
}

std::string HypothesisReport::text() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << "\n";
  os << (pass ? "hypotheses: pass" : "hypotheses: FAIL") << "\n";
  return os.str();
}

HypothesisReport check_hypotheses(const Matroid& n, const MinorSet& s,
                                  const std::vector<Matroid>& sample_class) {
  HypothesisReport rep;
  rep.pass = true;
  auto fail = [&](const std::string& why) {
    rep.lines.push_back("FAIL: " + why);
    rep.pass = false;
  };
  auto ok = [&](const std::string& what) {
    rep.lines.push_back("ok: " + what);
  };

  if (auto why = s.hypothesis_violation())
    fail(*why);
  else if (!s.members.empty())
    ok("S members are 3-connected, >= 4 elements, no wheels or whirls");

  if (n.size() < 4)
    fail("N has fewer than four elements");
  else
    ok("|E(N)| >= 4");
  if (!n.is_3connected())
    fail("N is not 3-connected");
  else
    ok("N is 3-connected");
  if (is_wheel_or_whirl(n))
    fail("N is a wheel or a whirl");
  else
    ok("N is neither a wheel nor a whirl");

  // Spot-check: fragile members with an S-minor are 3-connected up to
  // series and parallel sets.
  int checked = 0;
  for (const Matroid& m : sample_class) {
    if (!has_S_minor(m, s)) continue;
    if (!is_S_fragile(m, s).fragile) continue;
    ++checked;
    if (!m.is_3connected_up_to_sp())
      fail("a fragile sample with an S-minor is not 3-connected up to "
           "series/parallel sets");
  }
  if (checked > 0)
    ok(std::to_string(checked) +
       " fragile class sample(s) are 3-connected up to series/parallel "
       "sets");
  return rep;
}

}  // namespace fanforge
