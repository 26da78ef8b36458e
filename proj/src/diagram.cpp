#include "posdiag/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "posdiag/error.hpp"

namespace posdiag {

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NegativeGenus: return "NegativeGenus";
    case ViolationKind::NoXCurves: return "NoXCurves";
    case ViolationKind::NoYCurves: return "NoYCurves";
    case ViolationKind::DuplicateOnX: return "DuplicateOnX";
    case ViolationKind::DuplicateOnY: return "DuplicateOnY";
    case ViolationKind::MissingOnX: return "MissingOnX";
    case ViolationKind::MissingOnY: return "MissingOnY";
    case ViolationKind::MissingSign: return "MissingSign";
    case ViolationKind::UnknownSign: return "UnknownSign";
    case ViolationKind::BadSign: return "BadSign";
  }
  return "?";
}

std::vector<Violation> validate(const Diagram& dg) {
  std::vector<Violation> out;
  if (dg.declared_genus < 0) out.push_back({ViolationKind::NegativeGenus, 0, "declared genus < 0"});
  if (dg.x_curves.empty()) out.push_back({ViolationKind::NoXCurves, 0, "no X curves"});
  if (dg.y_curves.empty()) out.push_back({ViolationKind::NoYCurves, 0, "no Y curves"});

  auto collect = [&](const std::vector<Curve>& curves, ViolationKind dup, const char* side) {
    std::set<CrossingId> seen;
    for (std::size_t c = 0; c < curves.size(); ++c)
      for (CrossingId id : curves[c])
        if (!seen.insert(id).second)
          out.push_back({dup, id,
                         "crossing " + std::to_string(id) + " occurs twice on the " + side +
                             " curves"});
    return seen;
  };
  const auto on_x = collect(dg.x_curves, ViolationKind::DuplicateOnX, "X");
  const auto on_y = collect(dg.y_curves, ViolationKind::DuplicateOnY, "Y");

  for (CrossingId id : on_x)
    if (!on_y.contains(id))
      out.push_back({ViolationKind::MissingOnY, id,
                     "crossing " + std::to_string(id) + " lies on no Y curve"});
  for (CrossingId id : on_y)
    if (!on_x.contains(id))
      out.push_back({ViolationKind::MissingOnX, id,
                     "crossing " + std::to_string(id) + " lies on no X curve"});

  std::set<CrossingId> all = on_x;
  all.insert(on_y.begin(), on_y.end());
  for (CrossingId id : all)
    if (!dg.crossing_signs.contains(id))
      out.push_back({ViolationKind::MissingSign, id,
                     "crossing " + std::to_string(id) + " has no sign"});
  for (const auto& [id, sign] : dg.crossing_signs) {
    if (!all.contains(id))
      out.push_back({ViolationKind::UnknownSign, id,
                     "sign given for unknown crossing " + std::to_string(id)});
    if (sign != 1 && sign != -1)
      out.push_back({ViolationKind::BadSign, id,
                     "crossing " + std::to_string(id) + " has sign " + std::to_string(sign)});
  }
  return out;
}

void require_valid(const Diagram& dg) {
  const auto v = validate(dg);
  if (!v.empty()) throw_precondition("InvalidDiagram", to_string(v.front().kind) + ": " + v.front().detail);
}

bool is_positive_diagram(const Diagram& dg) {
  return std::all_of(dg.crossing_signs.begin(), dg.crossing_signs.end(),
                     [](const auto& kv) { return kv.second == 1; });
}

namespace {

// Dense incidence structure of a valid diagram.
struct Incidence {
  std::vector<CrossingId> ids;  // index -> id, increasing
  std::unordered_map<CrossingId, std::size_t> index;
  std::vector<std::size_t> succ_x, pred_x, succ_y, pred_y;
  std::vector<std::size_t> x_curve;  // index of the X curve through a crossing
  std::vector<int> sign;

  explicit Incidence(const Diagram& dg) {
    for (const auto& [id, s] : dg.crossing_signs) {
      index.emplace(id, ids.size());
      ids.push_back(id);
      sign.push_back(s);
    }
    const std::size_t d = ids.size();
    succ_x.assign(d, 0);
    pred_x.assign(d, 0);
    succ_y.assign(d, 0);
    pred_y.assign(d, 0);
    x_curve.assign(d, 0);
    link(dg.x_curves, succ_x, pred_x);
    link(dg.y_curves, succ_y, pred_y);
    for (std::size_t c = 0; c < dg.x_curves.size(); ++c)
      for (CrossingId id : dg.x_curves[c]) x_curve[index.at(id)] = c;
  }

  void link(const std::vector<Curve>& curves, std::vector<std::size_t>& succ,
            std::vector<std::size_t>& pred) const {
    for (const auto& curve : curves)
      for (std::size_t k = 0; k < curve.size(); ++k) {
        const std::size_t a = index.at(curve[k]);
        const std::size_t b = index.at(curve[(k + 1) % curve.size()]);
        succ[a] = b;
        pred[b] = a;
      }
  }
};

// Half-edge slots in counterclockwise order at a positive crossing.
enum Slot : std::size_t { XOut = 0, YOut = 1, XIn = 2, YIn = 3 };

std::size_t opposite(const Incidence& inc, std::size_t h) {
  const std::size_t c = h / 4;
  switch (h % 4) {
    case XOut: return 4 * inc.succ_x[c] + XIn;
    case XIn: return 4 * inc.pred_x[c] + XOut;
    case YOut: return 4 * inc.succ_y[c] + YIn;
    default: return 4 * inc.pred_y[c] + YOut;
  }
}

std::size_t rotate(const Incidence& inc, std::size_t h) {
  const std::size_t c = h / 4;
  const std::size_t slot = h % 4;
  // (X-out, Y-out, X-in, Y-in) at +1; the reverse cyclic order at -1.
  const std::size_t next = inc.sign[c] == 1 ? (slot + 1) % 4 : (slot + 3) % 4;
  return 4 * c + next;
}

std::vector<std::size_t> component_labels(const Incidence& inc) {
  const std::size_t d = inc.ids.size();
  std::vector<std::size_t> parent(d);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t c = 0; c < d; ++c) {
    parent[find(c)] = find(inc.succ_x[c]);
    parent[find(c)] = find(inc.succ_y[c]);
  }
  std::vector<std::size_t> label(d);
  for (std::size_t c = 0; c < d; ++c) label[c] = find(c);
  return label;
}

// Number of faces of the ribbon graph restricted to crossings with
// label == which.
std::size_t face_count(const Incidence& inc, const std::vector<std::size_t>& label,
                       std::size_t which) {
  const std::size_t d = inc.ids.size();
  std::vector<char> seen(4 * d, 0);
  std::size_t faces = 0;
  for (std::size_t h0 = 0; h0 < 4 * d; ++h0) {
    if (seen[h0] || label[h0 / 4] != which) continue;
    ++faces;
    for (std::size_t h = h0; !seen[h]; h = rotate(inc, opposite(inc, h))) seen[h] = 1;
  }
  return faces;
}

void require_no_isolated(const Diagram& dg) {
  for (const auto* side : {&dg.x_curves, &dg.y_curves})
    for (const auto& c : *side)
      if (c.empty()) throw_precondition("IsolatedCurve", "a curve has no crossings");
}

}  // namespace

std::int64_t rotation_genus(const Diagram& dg) {
  require_valid(dg);
  require_no_isolated(dg);
  const Incidence inc(dg);
  const std::size_t d = inc.ids.size();
  const auto label = component_labels(inc);
  for (std::size_t c = 1; c < d; ++c)
    if (label[c] != label[0]) throw_precondition("Disconnected", "X u Y is not connected");
  const auto faces = static_cast<std::int64_t>(face_count(inc, label, label[0]));
  // V - E + F = d - 2d + F = 2 - 2 genus
  return (2 + static_cast<std::int64_t>(d) - faces) / 2;
}

std::int64_t rotation_genus_by_component(const Diagram& dg) {
  require_valid(dg);
  const Incidence inc(dg);
  const auto label = component_labels(inc);
  std::map<std::size_t, std::int64_t> vertices;
  for (std::size_t l : label) ++vertices[l];
  std::int64_t genus = 0;
  for (const auto& [root, v] : vertices) {
    const auto faces = static_cast<std::int64_t>(face_count(inc, label, root));
    genus += (2 + v - faces) / 2;
  }
  return genus;
}

std::vector<std::vector<CrossingId>> components(const Diagram& dg) {
  require_valid(dg);
  const Incidence inc(dg);
  const auto label = component_labels(inc);
  std::map<std::size_t, std::vector<CrossingId>> groups;
  for (std::size_t c = 0; c < label.size(); ++c) groups[label[c]].push_back(inc.ids[c]);
  std::vector<std::vector<CrossingId>> out;
  for (auto& [root, ids] : groups) out.push_back(std::move(ids));
  std::sort(out.begin(), out.end());
  return out;
}

Presentation diagram_presentation(const Diagram& dg) {
  require_valid(dg);
  const Incidence inc(dg);
  Presentation p;
  p.n_generators = static_cast<int>(dg.x_curves.size());
  for (const auto& y : dg.y_curves) {
    Word w;
    w.reserve(y.size());
    for (CrossingId id : y) {
      const std::size_t c = inc.index.at(id);
      w.push_back(static_cast<int>(inc.x_curve[c] + 1) * inc.sign[c]);
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

SnfResult diagram_homology(const Diagram& dg) { return abelianization(diagram_presentation(dg)); }

// ---------------------------------------------------------------------------

void validate(const PermutationPair& p) {
  if (p.sigma_x.size() != p.sigma_y.size())
    throw_precondition("InvalidPermutation", "sigma_x and sigma_y have different degrees");
  const int d = static_cast<int>(p.sigma_x.size());
  for (const auto* perm : {&p.sigma_x, &p.sigma_y}) {
    std::vector<char> hit(static_cast<std::size_t>(d) + 1, 0);
    for (int image : *perm) {
      if (image < 1 || image > d || hit[static_cast<std::size_t>(image)])
        throw_precondition("InvalidPermutation", "not a bijection on 1.." + std::to_string(d));
      hit[static_cast<std::size_t>(image)] = 1;
    }
  }
}

PermutationPair montesinos_encode(const Diagram& dg) {
  require_valid(dg);
  if (!is_positive_diagram(dg))
    throw_precondition("NotPositive", "Montesinos encoding needs a positive diagram");
  const Incidence inc(dg);
  const std::size_t d = inc.ids.size();
  PermutationPair p;
  p.sigma_x.resize(d);
  p.sigma_y.resize(d);
  for (std::size_t c = 0; c < d; ++c) {
    p.sigma_x[c] = static_cast<int>(inc.succ_x[c] + 1);
    p.sigma_y[c] = static_cast<int>(inc.succ_y[c] + 1);
  }
  return p;
}

namespace {

std::vector<Curve> cycles(const std::vector<int>& perm) {
  std::vector<Curve> out;
  std::vector<char> seen(perm.size() + 1, 0);
  for (int start = 1; start <= static_cast<int>(perm.size()); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Curve c;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = perm[static_cast<std::size_t>(v - 1)]) {
      seen[static_cast<std::size_t>(v)] = 1;
      c.push_back(v);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Curve> canonical_curves(std::vector<Curve> curves) {
  for (auto& c : curves)
    if (!c.empty()) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::stable_sort(curves.begin(), curves.end(), [](const Curve& a, const Curve& b) {
    if (a.empty() || b.empty()) return a.empty() && !b.empty();
    return a.front() < b.front();
  });
  return curves;
}

}  // namespace

Diagram montesinos_decode(const PermutationPair& p) {
  validate(p);
  Diagram dg;
  dg.x_curves = cycles(p.sigma_x);
  dg.y_curves = cycles(p.sigma_y);
  for (std::size_t i = 1; i <= p.degree(); ++i) dg.crossing_signs[static_cast<CrossingId>(i)] = 1;
  if (p.degree() == 0) {
    // Keep the splitting-diagram shape: one empty curve on each side.
    dg.x_curves.emplace_back();
    dg.y_curves.emplace_back();
    return dg;
  }
  dg.declared_genus = rotation_genus_by_component(dg);
  return dg;
}

Diagram canonical_form(const Diagram& dg) {
  Diagram out = dg;
  out.x_curves = canonical_curves(dg.x_curves);
  out.y_curves = canonical_curves(dg.y_curves);
  return out;
}

Diagram relabel_crossings(const Diagram& dg, const std::map<CrossingId, CrossingId>& relabel) {
  Diagram out;
  out.declared_genus = dg.declared_genus;
  auto map_curves = [&](const std::vector<Curve>& curves) {
    std::vector<Curve> res;
    for (const auto& c : curves) {
      Curve r;
      for (CrossingId id : c) r.push_back(relabel.at(id));
      res.push_back(std::move(r));
    }
    return res;
  };
  out.x_curves = map_curves(dg.x_curves);
  out.y_curves = map_curves(dg.y_curves);
  for (const auto& [id, s] : dg.crossing_signs) out.crossing_signs[relabel.at(id)] = s;
  if (out.crossing_signs.size() != dg.crossing_signs.size())
    throw_precondition("InvalidRelabel", "relabelling is not injective");
  return out;
}

std::string to_dot(const Diagram& dg) {
  std::ostringstream os;
  os << "graph diagram {\n  node [shape=circle, fontsize=10];\n";
  for (const auto& [id, s] : dg.crossing_signs)
    os << "  c" << id << " [label=\"" << id << (s > 0 ? "+" : "-") << "\"];\n";
  auto emit = [&](const std::vector<Curve>& curves, const char* colour, const char* name) {
    for (std::size_t k = 0; k < curves.size(); ++k) {
      const auto& c = curves[k];
      for (std::size_t i = 0; i < c.size(); ++i)
        os << "  c" << c[i] << " -- c" << c[(i + 1) % c.size()] << " [color=" << colour
           << ", label=\"" << name << k + 1 << "\"];\n";
    }
  };
  emit(dg.x_curves, "blue", "X");
  emit(dg.y_curves, "red", "Y");
  os << "}\n";
  return os.str();
}

}  // namespace posdiag
