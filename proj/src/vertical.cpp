#include "posdiag/vertical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

#include "posdiag/error.hpp"

namespace posdiag {

ChainPlan plan_decomposition(std::size_t m) {
  ChainPlan plan;
  plan.r = std::max<std::size_t>(m, 3);
  const std::size_t disks = plan.r - 1;
  for (std::size_t i = 0; i < disks; ++i) {
    plan.d_disks.push_back(i);
    plan.sign_pattern.push_back(i % 2 == 0 ? SignConstraint::Positive : SignConstraint::Negative);
  }
  plan.e_disk = plan.r - 1;
  plan.sign_pattern.push_back(SignConstraint::Positive);
  for (std::size_t q = 0; q + 1 < disks; ++q) {
    plan.squares.emplace_back(q, q + 1);
    plan.gamma_d.emplace_back(q, q + 1);
    plan.b_disks.push_back(q);
  }
  plan.gamma_e_loops = plan.r - 2;
  plan.s_host = 0;
  return plan;
}

void check_plan(const ChainPlan& plan) {
  auto bad = [](const std::string& why) { throw_precondition("InvalidPlan", why); };
  if (plan.r < 3) bad("fewer than three fiber slots");
  if (plan.d_disks.size() != plan.r - 1) bad("expected r-1 D disks");
  if (plan.sign_pattern.size() != plan.r) bad("sign pattern must cover every slot");
  if (plan.squares.size() != plan.r - 2) bad("expected r-2 squares");
  if (plan.gamma_e_loops != plan.r - 2) bad("E graph must carry r-2 loops");
  if (!plan.a_disks.empty()) bad("a tree-shaped D graph has no D-side vertical disks");
  if (plan.b_disks.size() != plan.squares.size()) bad("every square carries an E-side disk");
  if (plan.s_host >= plan.d_disks.size()) bad("s host out of range");
  for (std::size_t q = 0; q < plan.squares.size(); ++q)
    if (plan.squares[q] != std::make_pair(q, q + 1) || plan.gamma_d[q] != plan.squares[q])
      bad("squares must join consecutive D disks");
  auto sign_of_disk = [&](std::size_t i) { return plan.sign_pattern[plan.d_disks[i]]; };
  for (const auto& [a, b] : plan.squares)
    if (sign_of_disk(a) == sign_of_disk(b) || sign_of_disk(a) == SignConstraint::Free ||
        sign_of_disk(b) == SignConstraint::Free)
      bad("disks joined by a square need opposite signs");
  if (plan.sign_pattern[plan.e_disk] != SignConstraint::Positive) bad("E slope must be positive");
  if (sign_of_disk(plan.s_host) != SignConstraint::Positive) bad("s host must have positive slope");
}

std::vector<FiberInvariant> assign_betas(const SeifertData& input, const ChainPlan& plan) {
  check_plan(plan);
  const SeifertData s = normalize(input);
  if (std::max<std::size_t>(s.fibers.size(), 3) != plan.r)
    throw_precondition("InvalidPlan", "plan does not match the fiber count");
  const SeifertData out = denormalize(s, plan.sign_pattern, plan.e_disk);

  // Every chain plan has both signs available, so denormalize never fails;
  // the checks below guard the postconditions.
  Integer floors = 0;
  for (std::size_t i = 0; i < out.fibers.size(); ++i) {
    const auto& f = out.fibers[i];
    const bool ok_sign = plan.sign_pattern[i] == SignConstraint::Positive ? f.beta > 0 : f.beta < 0;
    if (!ok_sign || gcd(f.alpha, f.beta) != 1)
      throw_internal("UnsatisfiablePattern", "slot " + std::to_string(i) + " violates its sign");
    floors += floor_div(f.beta, f.alpha);
  }
  if (floors != -*s.euler) throw_internal("UnsatisfiablePattern", "floor sum changed");
  return out.fibers;
}

namespace {

// A curve carried by the train track "horizontal loop with `a` parallel
// strands, vertical loop with `b` strands" on a torus, built as the
// oriented resolution of a horizontal and b vertical circles. Strand k of
// the horizontal branch sits at height offset k; strand l of the vertical
// branch at offset l in the direction of horizontal travel. Returns the
// long passages (outside the switch) in traversal order, starting with
// horizontal strand 0.
struct Passage {
  bool horizontal;
  long strand;
};

std::vector<Passage> carried_curve(long a, long b) {
  std::vector<Passage> out;
  Passage p{true, 0};
  do {
    out.push_back(p);
    if (p.horizontal)
      p = p.strand >= a - b ? Passage{false, a - 1 - p.strand} : Passage{true, p.strand + b};
    else
      p = p.strand >= b - a ? Passage{true, b - 1 - p.strand} : Passage{false, p.strand + a};
  } while (!(p.horizontal && p.strand == 0) && out.size() <= static_cast<std::size_t>(a + b));
  if (out.size() != static_cast<std::size_t>(a + b))
    throw_internal("SynthesisInvariantViolation", "carried curve is not connected");
  return out;
}

long small(const Integer& v) {
  if (!v.fits_slong_p()) throw_precondition("TooLarge", "slope too large to synthesize");
  return v.get_si();
}

enum CrossingKind : long {
  VerticalXOnY = 0,  // vertical strand of X_i under a horizontal strand of Y_1
  HorizontalXOnY = 1,  // horizontal strand of X_host under a vertical strand of Y_1
  Square = 2           // horizontal strand of X under the boundary of B_q
};

using Key = std::array<long, 4>;

}  // namespace

Diagram synthesize_diagram(const ChainPlan& plan, const std::vector<FiberInvariant>& slopes) {
  check_plan(plan);
  if (slopes.size() != plan.r) throw_precondition("InvalidPlan", "one slope per slot required");
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    const bool pos = slopes[i].beta > 0;
    const bool ok = plan.sign_pattern[i] == SignConstraint::Positive ? pos : slopes[i].beta < 0;
    if (!ok || slopes[i].alpha < 1 || gcd(slopes[i].alpha, slopes[i].beta) != 1)
      throw_precondition("UnsatisfiablePattern",
                         "slope in slot " + std::to_string(i) + " does not meet the plan");
  }

  const std::size_t disks = plan.d_disks.size();
  std::vector<long> h_strands(disks), v_strands(disks);
  std::vector<int> dir(disks);
  long total = 0;
  for (std::size_t i = 0; i < disks; ++i) {
    const auto& f = slopes[plan.d_disks[i]];
    h_strands[i] = small(f.alpha);
    v_strands[i] = small(abs(f.beta));
    dir[i] = sgn(f.beta);
  }
  const long e_h = small(slopes[plan.e_disk].alpha);
  const long e_v = small(slopes[plan.e_disk].beta);
  const std::size_t host = plan.s_host;

  for (std::size_t i = 0; i < disks; ++i) total += v_strands[i] * e_h + 2 * h_strands[i];
  total += h_strands[host] * e_v;
  constexpr long kMaxCrossings = 20'000'000;
  if (total > kMaxCrossings) throw_precondition("TooLarge", "diagram would be too large");

  std::map<Key, CrossingId> ids;
  Diagram dg;
  dg.declared_genus = static_cast<std::int64_t>(plan.r - 1);

  // X_i lives on the torus over the boundary of D_i; its vertical strands
  // sit at the top arc (shared with E), its horizontal strands run once
  // around at a height above the square attachments. Going around the
  // boundary counterclockwise from the top: left square, bottom arc (where
  // Y_1 turns if this is the host), right square.
  for (std::size_t i = 0; i < disks; ++i) {
    Curve curve;
    auto emit = [&](const Key& k) {
      const auto [it, fresh] = ids.emplace(k, static_cast<CrossingId>(ids.size() + 1));
      if (!fresh) throw_internal("SynthesisInvariantViolation", "crossing met twice along X");
      curve.push_back(it->second);
    };
    const bool has_left = i > 0;
    const bool has_right = i + 1 < disks;
    for (const auto& p : carried_curve(h_strands[i], v_strands[i])) {
      if (!p.horizontal) {
        for (long k = 0; k < e_h; ++k) emit({VerticalXOnY, static_cast<long>(i), p.strand, k});
        continue;
      }
      auto left = [&] {
        if (has_left) emit({Square, static_cast<long>(i - 1), 1, p.strand});
      };
      auto right = [&] {
        if (has_right) emit({Square, static_cast<long>(i), 0, p.strand});
      };
      auto bottom = [&] {
        if (i != host) return;
        if (dir[i] > 0)
          for (long l = e_v - 1; l >= 0; --l) emit({HorizontalXOnY, p.strand, l, 0});
        else
          for (long l = 0; l < e_v; ++l) emit({HorizontalXOnY, p.strand, l, 0});
      };
      if (dir[i] > 0) {
        left();
        bottom();
        right();
      } else {
        right();
        bottom();
        left();
      }
    }
    dg.x_curves.push_back(std::move(curve));
  }

  auto lookup = [&](const Key& k) {
    const auto it = ids.find(k);
    if (it == ids.end()) throw_internal("SynthesisInvariantViolation", "Y crossing missing on X");
    return it->second;
  };

  // Y_1 on the torus over the boundary of E: its horizontal strands follow
  // the boundary of E (meeting the tops of D_1..D_{r-1} in order), its
  // vertical strands sit over the bottom arc of the host disk.
  {
    Curve curve;
    for (const auto& p : carried_curve(e_h, e_v)) {
      if (p.horizontal) {
        for (std::size_t i = 0; i < disks; ++i) {
          if (dir[i] > 0)
            for (long l = v_strands[i] - 1; l >= 0; --l)
              curve.push_back(lookup({VerticalXOnY, static_cast<long>(i), l, p.strand}));
          else
            for (long l = 0; l < v_strands[i]; ++l)
              curve.push_back(lookup({VerticalXOnY, static_cast<long>(i), l, p.strand}));
        }
      } else {
        for (long k = 0; k < h_strands[host]; ++k)
          curve.push_back(lookup({HorizontalXOnY, k, p.strand, 0}));
      }
    }
    dg.y_curves.push_back(std::move(curve));
  }

  // Boundary of B_q: up across the horizontal strands on the positive side,
  // down across those on the negative side.
  for (std::size_t q = 0; q < plan.squares.size(); ++q) {
    Curve curve;
    const long ql = static_cast<long>(q);
    auto up = [&](long side, long strands) {
      for (long k = 0; k < strands; ++k) curve.push_back(lookup({Square, ql, side, k}));
    };
    auto down = [&](long side, long strands) {
      for (long k = strands - 1; k >= 0; --k) curve.push_back(lookup({Square, ql, side, k}));
    };
    if (dir[q] > 0) {
      up(0, h_strands[q]);
      down(1, h_strands[q + 1]);
    } else {
      up(1, h_strands[q + 1]);
      down(0, h_strands[q]);
    }
    dg.y_curves.push_back(std::move(curve));
  }

  for (const auto& [key, id] : ids) dg.crossing_signs[id] = 1;
  return dg;
}

Diagram build_positive_vertical(const SeifertData& input) {
  const SeifertData s = normalize(input);
  if (s.base_genus != 0)
    throw_precondition("BaseGenusUnsupported",
                       "positive vertical diagrams are built for base S^2 only");
  const ChainPlan plan = plan_decomposition(s.fibers.size());
  const auto slopes = assign_betas(s, plan);
  Diagram dg = synthesize_diagram(plan, slopes);

  auto fail = [](const std::string& why) {
    throw_internal("SynthesisInvariantViolation", why);
  };
  const auto violations = validate(dg);
  if (!violations.empty()) fail("invalid diagram: " + violations.front().detail);
  if (!is_positive_diagram(dg)) fail("negative crossing");
  const auto genus = static_cast<std::size_t>(dg.declared_genus);
  if (dg.x_curves.size() != genus || dg.y_curves.size() != genus) fail("curve count mismatch");
  std::int64_t rg = 0;
  try {
    rg = rotation_genus(dg);
  } catch (const Error& e) {
    fail(std::string("rotation genus: ") + e.what());
  }
  if (rg > dg.declared_genus) fail("rotation genus exceeds declared genus");
  if (diagram_homology(dg).group() != homology(s).group()) fail("H_1 mismatch");
  return dg;
}

}  // namespace posdiag
