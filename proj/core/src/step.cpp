#include "netcalc/step.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "netcalc/canonical.hpp"

namespace netcalc {

namespace {

// Label-level arc relation of m: (label(x), label(y)) for each arc (x, y).
std::set<std::pair<Label, Label>> label_arcs(const NetModule& m) {
  std::set<std::pair<Label, Label>> out;
  for (const Arc& a : m.arcs)
    out.insert({m.elements[a.src], m.elements[a.dst]});
  return out;
}

}  // namespace

StepCheck is_step_of(const NetModule& m, const NetModule& s) {
  StepCheck check;
  std::vector<ElementId> trans;
  for (ElementId e = 0; e < s.size(); ++e)
    if (s.is_transition(e)) trans.push_back(e);
  if (trans.size() != 1) {
    check.violations.push_back("expected exactly one transition, found " +
                               std::to_string(trans.size()));
    return check;
  }
  const ElementId u = trans[0];
  const Label& ul = s.elements[u];
  const std::set<std::pair<Label, Label>> la = label_arcs(m);

  for (ElementId p = 0; p < s.size(); ++p) {
    if (!s.is_place(p)) continue;
    const Label& pl = s.elements[p];
    bool host_pre = la.count({pl, ul}) != 0;
    bool host_post = la.count({ul, pl}) != 0;
    bool step_pre = false, step_post = false;
    for (const Arc& a : s.arcs) {
      if (a.src == p && a.dst == u) step_pre = true;
      if (a.src == u && a.dst == p) step_post = true;
    }
    if (host_pre && !step_pre)
      check.violations.push_back("missing pre-arc: place \"" + pl.name + "\"");
    if (!host_pre && step_pre)
      check.violations.push_back("extra pre-arc: place \"" + pl.name + "\"");
    if (host_post && !step_post)
      check.violations.push_back("missing post-arc: place \"" + pl.name + "\"");
    if (!host_post && step_post)
      check.violations.push_back("extra post-arc: place \"" + pl.name + "\"");
  }
  check.ok = check.violations.empty();
  return check;
}

Step basic_step(const NetModule& m, ElementId t) {
  if (t >= m.size())
    throw std::invalid_argument("basic_step: unknown element id");
  if (!m.is_transition(t))
    throw std::invalid_argument("basic_step: element is not a transition");

  const Label ul = m.elements[t];
  const std::set<std::pair<Label, Label>> la = label_arcs(m);

  // One place per distinct adjacent label, ordered by first occurrence of
  // the label among m's places.
  std::vector<Label> order;
  std::set<Label> taken;
  for (const Label& l : m.elements) {
    if (l.kind != NodeKind::Place || taken.count(l)) continue;
    if (la.count({l, ul}) || la.count({ul, l})) {
      order.push_back(l);
      taken.insert(l);
    }
  }

  Step step;
  step.host_transition_label = ul;
  NetModule& net = step.net;
  net.elements = order;
  const ElementId u = static_cast<ElementId>(net.elements.size());
  net.elements.push_back(ul);
  for (ElementId p = 0; p < u; ++p) {
    bool pre = la.count({net.elements[p], ul}) != 0;
    bool post = la.count({ul, net.elements[p]}) != 0;
    if (pre) net.arcs.push_back({p, u});
    if (post) net.arcs.push_back({u, p});
    // abandoned states left, entered states right; self-loops in neither
    if (pre && !post) net.left.push_back(p);
    if (post && !pre) net.right.push_back(p);
  }
  normalize_arcs(net);
  return step;
}

StepEnumeration enumerate_steps(const NetModule& m, ElementId t,
                                std::size_t budget) {
  const Step skeleton = basic_step(m, t);
  const std::size_t k = skeleton.net.size();

  StepEnumeration out;
  std::set<CanonicalForm> seen;
  std::vector<int> digits(k, 0);  // 0 neither, 1 left, 2 right
  // base-3 counter over skeleton elements, least significant digit first
  for (;;) {
    if (out.steps.size() >= budget) {
      out.truncated = true;
      return out;
    }
    Step s;
    s.host_transition_label = skeleton.host_transition_label;
    s.net.elements = skeleton.net.elements;
    s.net.arcs = skeleton.net.arcs;
    for (ElementId e = 0; e < k; ++e) {
      if (digits[e] == 1) s.net.left.push_back(e);
      if (digits[e] == 2) s.net.right.push_back(e);
    }
    if (seen.insert(canonical_form(s.net)).second)
      out.steps.push_back(std::move(s));

    std::size_t i = 0;
    while (i < k && digits[i] == 2) digits[i++] = 0;
    if (i == k) break;
    ++digits[i];
  }
  return out;
}

}  // namespace netcalc
