#include "sierpinski/verify.hpp"

#include <chrono>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sierpinski/lattes.hpp"
#include "sierpinski/render.hpp"
#include "sierpinski/sampling.hpp"
#include "sierpinski/symmetry.hpp"

namespace sierpinski {

GridOracle::GridOracle(long p, unsigned level) : p_(p), level_(level) {
  require_odd_base(p);
  const unsigned cap = p == 3 ? 6 : 4;
  if (level > cap) throw std::domain_error("grid oracle level " + std::to_string(level) + " exceeds " + std::to_string(cap));
  const auto pu = static_cast<Index>(p);
  const Index mid = pu / 2;
  for (auto* grid : {&front_, &back_}) {
    Index side = 1;
    std::vector<std::uint8_t> cur{1};
    for (unsigned k = 0; k < level; ++k) {
      const Index next_side = side * pu;
      std::vector<std::uint8_t> next(next_side * next_side, 0);
      for (Index i = 0; i < next_side; ++i) {
        for (Index j = 0; j < next_side; ++j) {
          const bool parent_good = cur[(i / pu) * side + j / pu] != 0;
          next[i * next_side + j] = parent_good && !(i % pu == mid && j % pu == mid);
        }
      }
      cur = std::move(next);
      side = next_side;
    }
    *grid = std::move(cur);
    side_ = side;
  }
}

bool GridOracle::good(const TileAddress& t) const {
  if (t.level != level_ || t.i >= side_ || t.j >= side_) throw std::domain_error("tile outside the oracle grid: " + t.str());
  const auto& grid = t.face == Face::Front ? front_ : back_;
  return grid[t.i * side_ + t.j] != 0;
}

bool oracle_member(const GridOracle& o, const PillowPoint& q, CarpetSpace space) {
  for (const TileAddress& t : tile_of_point(o.p(), q, o.level())) {
    if (space == CarpetSpace::SpFront && t.face != Face::Front) continue;
    if (space == CarpetSpace::SpBack && t.face != Face::Back) continue;
    if (o.good(t)) return true;
  }
  return false;
}

std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Skipped: return "skipped";
  }
  return "?";
}

SuiteLevels SuiteLevels::defaults(long p) {
  SuiteLevels l;
  l.tiles = p <= 7 ? 5 : 4;
  l.oracle = p <= 5 ? 4 : 3;
  l.checkerboard = p <= 5 ? 4 : 3;
  l.color_orbit = p <= 7 ? 3 : 2;
  l.circles = p <= 5 ? 3 : 2;
  l.render = p == 3 ? 4 : 3;
  l.cross_vertices = p == 3 ? 200 : 24;
  return l;
}

bool VerificationReport::all_passed() const {
  for (const ClaimResult& c : claims) {
    if (c.status == ClaimStatus::Fail) return false;
  }
  return true;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["p"] = p;
  j["seed"] = seed;
  j["claims"] = nlohmann::ordered_json::array();
  for (const ClaimResult& c : claims) {
    nlohmann::ordered_json entry;
    entry["id"] = c.id;
    entry["anchor"] = c.anchor;
    entry["status"] = std::string(to_string(c.status));
    if (c.witness.empty()) {
      entry["witness"] = nullptr;
    } else {
      entry["witness"] = c.witness;
    }
    entry["millis"] = c.millis;
    j["claims"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

namespace {

// Runs `body`, which returns an empty string on success or a witness.
template <class Body>
ClaimResult timed(std::string id, std::string anchor, const SuiteOptions& o, Body body) {
  ClaimResult r;
  r.id = std::move(id);
  r.anchor = std::move(anchor);
  const auto start = std::chrono::steady_clock::now();
  try {
    r.witness = body();
    r.status = r.witness.empty() ? ClaimStatus::Pass : ClaimStatus::Fail;
  } catch (const std::exception& e) {
    r.status = ClaimStatus::Fail;
    r.witness = std::string("exception: ") + e.what();
  }
  if (o.timings) {
    r.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

BigInt big_pow(long base, unsigned e) {
  BigInt out = 1;
  for (unsigned k = 0; k < e; ++k) out *= base;
  return out;
}

std::vector<Face> both_faces() { return {Face::Front, Face::Back}; }

// Every canonical vertex of the given level, front face first.
std::vector<VertexAddress> all_vertices(long p, unsigned level) {
  const Index s = side_count(p, level);
  std::vector<VertexAddress> out;
  for (Face f : both_faces()) {
    for (Index i = 0; i <= s; ++i) {
      for (Index j = 0; j <= s; ++j) {
        const VertexAddress v = canonical_vertex(p, {f, level, i, j});
        if (v.face == f) out.push_back(v);
      }
    }
  }
  return out;
}

bool on_middle_boundary(long p, const Rational& x, const Rational& y) {
  const long m = p / 2;
  const Rational lo(m, p), hi(m + 1, p);
  const bool x_in = lo <= x && x <= hi, y_in = lo <= y && y <= hi;
  return (x_in && (y == lo || y == hi)) || (y_in && (x == lo || x == hi));
}

}  // namespace

ClaimResult claim_tile_counts(long p, const SuiteOptions& o) {
  return timed("tile-counts", "2p^(2n) tiles and 2(p^2-1)^n good tiles at level n", o, [&]() -> std::string {
    const long m = p / 2;
    for (unsigned n = 0; n <= o.levels.tiles; ++n) {
      const BigInt all = 2 * big_pow(p, 2 * n);
      const BigInt good = 2 * big_pow(p * p - 1, n);
      const BigInt seen_all(static_cast<unsigned long>(enumerate_tile_count(p, n, false)));
      const BigInt seen_good(static_cast<unsigned long>(enumerate_tile_count(p, n, true)));
      if (seen_all != all || count_tiles(p, n) != all) return "level " + std::to_string(n) + ": tile count " + seen_all.get_str();
      if (seen_good != good || count_good_tiles(p, n) != good) {
        return "level " + std::to_string(n) + ": good tile count " + seen_good.get_str() + ", expected " + good.get_str();
      }
      // Small levels: recount by testing every address digit by digit.
      if (n <= 3) {
        const Index s = side_count(p, n);
        std::uint64_t brute = 0;
        for (Index i = 0; i < s; ++i) {
          for (Index j = 0; j < s; ++j) {
            bool ok = true;
            const auto mid = static_cast<Index>(m);
            for (Index a = i, b = j; ok && (a > 0 || b > 0); a /= p, b /= p) ok = !(a % p == mid && b % p == mid);
            brute += ok ? 2 : 0;
          }
        }
        if (BigInt(static_cast<unsigned long>(brute)) != good) return "level " + std::to_string(n) + ": digit recount " + std::to_string(brute);
      }
    }
    return {};
  });
}

ClaimResult claim_membership_oracle(long p, const SuiteOptions& o) {
  return timed("membership-oracle", "digit criterion agrees with the grid oracle on all points of denominator p^n",
               o, [&]() -> std::string {
    const unsigned n = o.levels.oracle;
    const GridOracle oracle(p, n);
    const Index s = side_count(p, n);
    const BigInt den(static_cast<unsigned long>(s));
    for (Face f : both_faces()) {
      for (Index a = 0; a <= s; ++a) {
        const Rational x(BigInt(static_cast<unsigned long>(a)), den);
        for (Index b = 0; b <= s; ++b) {
          const PillowPoint q(f, x, Rational(BigInt(static_cast<unsigned long>(b)), den));
          if (member(p, CarpetSpace::Dp, q) != oracle_member(oracle, q, CarpetSpace::Dp)) return "D_p disagreement at " + q.str();
          if (f == Face::Front && member(p, CarpetSpace::SpFront, q) != oracle_member(oracle, q, CarpetSpace::SpFront)) {
            return "S_p disagreement at " + q.str();
          }
        }
      }
    }
    return {};
  });
}

ClaimResult claim_checkerboard(long p, const SuiteOptions& o) {
  const auto color = o.color_rule ? o.color_rule : [](const TileAddress& t) { return tile_color(t); };
  return timed("checkerboard", "side-sharing tiles have opposite colors; color is the face reached by T^n", o,
               [&]() -> std::string {
    for (unsigned n = 0; n <= o.levels.checkerboard; ++n) {
      const Index s = side_count(p, n);
      for (Face f : both_faces()) {
        for (Index i = 0; i < s; ++i) {
          for (Index j = 0; j < s; ++j) {
            const TileAddress t{f, n, i, j};
            const TileColor ct = color(t);
            for (const EdgeAddress& e : tile_edges(p, t)) {
              for (const TileAddress& u : tiles_at_edge(p, e)) {
                if (u != t && color(u) == ct) {
                  return t.str() + " and " + u.str() + " share a side and are both " + std::string(to_string(ct));
                }
              }
            }
          }
        }
      }
    }
    for (unsigned n = 0; n <= o.levels.color_orbit; ++n) {
      const Index s = side_count(p, n);
      for (Face f : both_faces()) {
        for (Index i = 0; i < s; ++i) {
          for (Index j = 0; j < s; ++j) {
            const TileAddress t{f, n, i, j};
            const PillowPoint image = lattes_iterate(p, tile_center(p, t), n);
            const TileColor expected = image.face() == Face::Front ? TileColor::White : TileColor::Black;
            if (color(t) != expected) return t.str() + " is " + std::string(to_string(color(t))) + " but T^n(center) = " + image.str();
          }
        }
      }
    }
    return {};
  });
}

ClaimResult claim_lattes_laws(long p, const SuiteOptions& o) {
  return timed("lattes-laws", "T commutes with R, D_p is forward but not backward invariant, sides of Q are invariant", o,
               [&]() -> std::string {
    const CheckResult swap = commutes_with_face_swap(p, pillow_sample(p, 10000, o.seed));
    if (!swap.ok) return "T o R != R o T at " + swap.witness;
    const CheckResult fwd = forward_invariance_check(p, dp_sample(p, 1000, o.seed + 1));
    if (!fwd.ok) return "forward invariance: " + fwd.witness;
    const PillowPoint z = backward_noninvariance_witness(p);
    if (member(p, CarpetSpace::Dp, z) || !member(p, CarpetSpace::Dp, lattes_apply(p, z))) return "bad backward witness " + z.str();
    const CheckResult sides = side_invariance_check(p);
    if (!sides.ok) return "side invariance: " + sides.witness;
    return {};
  });
}

ClaimResult claim_inverse_branches(long p, const SuiteOptions& o) {
  return timed("inverse-branches", "T^n o T^-n = id on Q and the inverse branches are consistent", o, [&]() -> std::string {
    const auto sample = front_grid_sample(100);
    for (unsigned n = 0; n <= o.levels.branch; ++n) {
      const Rational corner = rational_pow(p, -static_cast<int>(n));
      for (const PillowPoint& q : sample) {
        const PillowPoint z = inverse_branch_apply(p, n, q);
        if (z.face() != Face::Front || z.x() > corner || z.y() > corner) return "T^-" + std::to_string(n) + "(" + q.str() + ") outside Z^n";
      }
      for (unsigned k = 0; k <= o.levels.branch; ++k) {
        const CheckResult r = branch_consistency_check(p, n, k, sample);
        if (!r.ok || r.checked != sample.size()) {
          return "(n,k)=(" + std::to_string(n) + "," + std::to_string(k) + ") fails at " + r.witness;
        }
      }
    }
    return {};
  });
}

ClaimResult claim_sigma(long p, const SuiteOptions& o) {
  return timed("sigma", "sigma = (1/(p+1), 1/(p+1)) lies in a good white 2-tile and T^2(sigma) = sigma", o,
               [&]() -> std::string {
    const SigmaReport r = sigma_facts(p);
    if (!r.ok()) {
      std::ostringstream w;
      w << "sigma=" << r.sigma.str() << " carpet=" << r.in_carpet << " off_seam=" << r.off_seam
        << " inside=" << r.inside_two_tile << " good=" << r.two_tile_good << " white=" << r.two_tile_white
        << " period2=" << r.period_two;
      return w.str();
    }
    // p^2 sigma - sigma = p - 1 is even, so T^2 fixes sigma in the plane model.
    const Rational s(1, p + 1);
    const Rational diff = Rational(p * p) * s - s;
    if (!diff.is_integer() || diff.numerator() % 2 != 0) return "p^2 sigma - sigma = " + diff.str();
    return {};
  });
}

ClaimResult claim_peripheral_dynamics(long p, const SuiteOptions& o) {
  return timed("peripheral-dynamics", "T(M) = O and T maps each peripheral circle onto a peripheral circle or onto O", o,
               [&]() -> std::string {
    for (Face f : both_faces()) {
      const auto mid = PeripheralCircleId::removed(CarpetSpace::Dp, f, 1, 0, 0);
      const PeripheralImage img = peripheral_image(p, mid, 20);
      if (!img.image.outer || !img.confirmed || img.samples != 20) return mid.str() + " is not sent onto O";
      for (const PillowPoint& q : sample_circle(p, mid, 20)) {
        const PillowPoint t = lattes_apply(p, q);
        if (!t.on_seam()) return "T(" + q.str() + ") = " + t.str() + " is off O";
      }
    }
    for (const PeripheralCircleId& c : peripheral_circles_up_to(p, CarpetSpace::Dp, o.levels.circles)) {
      const PeripheralImage img = peripheral_image(p, c, 20);
      if (!img.confirmed) return c.str() + ": sampled images leave " + img.image.str();
      if (img.image.outer) {
        if (c.level != 1) return c.str() + " of birth level " + std::to_string(c.level) + " sent onto O";
        continue;
      }
      if (img.image.level + 1 != c.level || !tile_is_good(p, img.image.parent())) {
        return c.str() + " sent to " + img.image.str() + ", which is not a circle one level up";
      }
    }
    return {};
  });
}

ClaimResult claim_cross_regions(long p, const SuiteOptions& o) {
  return timed("cross-regions",
               "cross regions around m-vertices are connected, contain a p^-(m+l) neighbourhood, and contain no ball "
               "of radius above sqrt2 p^-(m+l)",
               o, [&]() -> std::string {
    for (unsigned m = 0; m <= o.levels.cross_m; ++m) {
      const auto vertices = all_vertices(p, m);
      std::set<VertexAddress> chosen;
      if (vertices.size() <= o.levels.cross_vertices) {
        chosen.insert(vertices.begin(), vertices.end());
      } else {
        const std::size_t stride = vertices.size() / o.levels.cross_vertices + 1;
        for (std::size_t k = 0; k < vertices.size(); k += stride) chosen.insert(vertices[k]);
        // Always a pillow corner, a seam vertex and an interior vertex.
        chosen.insert(canonical_vertex(p, {Face::Front, m, 0, 0}));
        chosen.insert(canonical_vertex(p, {Face::Front, m, 1, 0}));
        chosen.insert(canonical_vertex(p, {Face::Back, m, 1, 1}));
      }
      for (unsigned l = 1; l <= o.levels.cross_l; ++l) {
        for (const VertexAddress& v : chosen) {
          const CrossRegionReport r = cross_region_check(p, m, l, v);
          if (!r.ok()) {
            return "m=" + std::to_string(m) + " l=" + std::to_string(l) + " vertex " + std::string(to_string(v.face)) + ":" +
                   std::to_string(v.i) + "," + std::to_string(v.j) + ": " + r.failure;
          }
        }
      }
    }
    return {};
  });
}

ClaimResult claim_isometry_group(long p, const SuiteOptions& o) {
  return timed("isometry-group",
               "the 16 isometries form a group preserving D_p; fixed sets are empty, finite, Cantor, O or everything", o,
               [&]() -> std::string {
    const auto group = all_isometries();
    const std::set<IsometryId> elems(group.begin(), group.end());
    if (group.size() != 16 || elems.size() != 16) return "expected 16 distinct isometries";
    const auto points = pillow_sample(p, 200, o.seed + 3);
    const auto dp = dp_sample(p, 200, o.seed + 4);
    for (const IsometryId& g : group) {
      if (!elems.count(isometry_inverse(g)) || isometry_compose(g, isometry_inverse(g)) != IsometryId::identity()) {
        return "no inverse for " + g.str();
      }
      for (const IsometryId& h : group) {
        const IsometryId gh = isometry_compose(g, h);
        if (!elems.count(gh)) return g.str() + " o " + h.str() + " leaves the group";
        for (std::size_t k = 0; k < 10; ++k) {
          if (isometry_apply(gh, points[k]) != isometry_apply(g, isometry_apply(h, points[k]))) {
            return "composition " + g.str() + " o " + h.str() + " disagrees at " + points[k].str();
          }
        }
        if (g != h) {
          bool differ = false;
          for (const PillowPoint& q : points) differ = differ || isometry_apply(g, q) != isometry_apply(h, q);
          if (!differ) return g.str() + " and " + h.str() + " act identically";
        }
      }
      for (std::size_t k = 0; k < points.size(); ++k) {
        const PillowPoint& a = points[k];
        const PillowPoint& b = points[(k + 1) % points.size()];
        if (member(p, CarpetSpace::Dp, isometry_apply(g, a)) != member(p, CarpetSpace::Dp, a)) {
          return g.str() + " changes membership of " + a.str();
        }
        if (distance_squared(isometry_apply(g, a), isometry_apply(g, b)) != distance_squared(a, b)) {
          return g.str() + " changes the distance between " + a.str() + " and " + b.str();
        }
      }

      const FixedSetClass fs = fixed_set_classify(g, p, o.levels.fixed_resolution);
      using Tag = FixedSetClass::Tag;
      const bool no_swap_reflection = !g.swap && (g.square == SquareSymmetry::DMain || g.square == SquareSymmetry::DAnti ||
                                                  g.square == SquareSymmetry::HMid || g.square == SquareSymmetry::VMid);
      if (g == IsometryId::identity()) {
        if (fs.tag != Tag::All) return "identity fixed set is " + fs.str();
        continue;
      }
      if (g == IsometryId::face_swap()) {
        if (fs.tag != Tag::JordanCurveO) return "R fixed set is " + fs.str();
        for (const PillowPoint& q : dp) {
          if ((isometry_apply(g, q) == q) != q.on_seam()) return "R fixes " + q.str() + " off O, or moves it on O";
        }
        continue;
      }
      if (fs.tag == Tag::JordanCurveO || fs.tag == Tag::All) return g.str() + " fixed set is " + fs.str();
      if (no_swap_reflection != (fs.tag == Tag::Cantor)) return g.str() + " fixed set is " + fs.str();
      if (fs.tag == Tag::Finite || fs.tag == Tag::Empty) {
        for (const PillowPoint& q : fs.points) {
          if (isometry_apply(g, q) != q || !member(p, CarpetSpace::Dp, q)) return g.str() + " lists non-fixed point " + q.str();
        }
        for (const PillowPoint& q : dp) {
          const bool listed = std::find(fs.points.begin(), fs.points.end(), q) != fs.points.end();
          if (isometry_apply(g, q) == q && !listed) return g.str() + " fixes unlisted " + q.str();
        }
      }
    }
    return {};
  });
}

ClaimResult claim_relation_witnesses(long p, const SuiteOptions& o) {
  return timed("relation-witnesses", "each isometry g satisfies T^m o g = T^n o g o T^k for some small k, n, m", o,
               [&]() -> std::string {
    const auto check = dp_sample(p, 1000, o.seed + 5);
    const unsigned b = o.levels.relation_bound;
    for (const IsometryId& g : all_isometries()) {
      const auto w = relation_witness(p, g, b, o.seed);
      if (!w) return "no witness for " + g.str();
      if (w->k > b || w->n > b || w->m > b || w->k < 1 || w->n < 1 || w->m < 1) return "witness out of range for " + g.str();
      for (const PillowPoint& q : check) {
        const PillowPoint lhs = lattes_iterate(p, isometry_apply(g, q), w->m);
        const PillowPoint rhs = lattes_iterate(p, isometry_apply(g, lattes_iterate(p, q, w->k)), w->n);
        if (lhs != rhs) return g.str() + " witness fails at " + q.str();
      }
    }
    return {};
  });
}

ClaimResult claim_admissibility(long p, const SuiteOptions& o) {
  return timed("admissibility",
               "points of D_p off the 1-vertices and the middle circles are good points where T scales lengths by p", o,
               [&]() -> std::string {
    std::vector<PillowPoint> points;
    for (const VertexAddress& v : all_vertices(p, 1)) points.push_back(vertex_point(p, v));
    for (Face f : both_faces()) {
      const auto sample = sample_circle(p, PeripheralCircleId::removed(CarpetSpace::Dp, f, 1, 0, 0), 20);
      points.insert(points.end(), sample.begin(), sample.end());
    }
    const auto dp = dp_sample(p, 500, o.seed + 6);
    points.insert(points.end(), dp.begin(), dp.end());
    const Rational pp(p);
    for (const PillowPoint& q : points) {
      const PointClass c = classify_point(p, q);
      const bool on_x = (q.x() * pp).is_integer(), on_y = (q.y() * pp).is_integer();
      const bool exceptional = (on_x && on_y) || on_middle_boundary(p, q.x(), q.y());
      using Tag = PointClass::Tag;
      if (c.tag == Tag::NotInDp) return q.str() + " classified outside D_p";
      if (exceptional != (c.tag == Tag::Exceptional)) return q.str() + " classified " + c.str();
      if (exceptional) continue;
      if ((on_x || on_y) != (c.tag == Tag::Case2)) return q.str() + " classified " + c.str();
      if (!c.scaling_certified || c.pairs_checked == 0) return q.str() + ": d(Ta,Tb) != p d(a,b) nearby";
    }
    return {};
  });
}

ClaimResult claim_render_faithfulness(long p, const SuiteOptions& o) {
  return timed("render-faithfulness", "carpet_front draws exactly the good front tiles, byte-stably", o, [&]() -> std::string {
    const unsigned n = o.levels.render;
    RenderConfig config;
    config.p = p;
    config.level = n;
    config.target = RenderTarget::CarpetFront;
    const std::string svg = render_svg(config);
    if (svg != render_svg(config)) return "two renders differ";
    std::set<std::pair<Index, Index>> drawn;
    const std::regex rect("<rect id=\"front-" + std::to_string(n) + "-([0-9]+)-([0-9]+)\"");
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), rect); it != std::sregex_iterator(); ++it) {
      drawn.emplace(std::stoull((*it)[1]), std::stoull((*it)[2]));
    }
    std::set<std::pair<Index, Index>> expected;
    for (const TileAddress& t : good_tiles(p, n, Face::Front)) expected.emplace(t.i, t.j);
    const BigInt per_face = big_pow(p * p - 1, n);
    if (BigInt(static_cast<unsigned long>(drawn.size())) != per_face) {
      return std::to_string(drawn.size()) + " squares drawn, expected " + per_face.get_str();
    }
    if (drawn != expected) return "drawn squares differ from the good-tile enumeration";
    return {};
  });
}

const std::vector<ClaimSpec>& suite_claims() {
  static const std::vector<ClaimSpec> claims = {
      {"tile-counts", claim_tile_counts},
      {"membership-oracle", claim_membership_oracle},
      {"checkerboard", claim_checkerboard},
      {"lattes-laws", claim_lattes_laws},
      {"inverse-branches", claim_inverse_branches},
      {"sigma", claim_sigma},
      {"peripheral-dynamics", claim_peripheral_dynamics},
      {"cross-regions", claim_cross_regions},
      {"isometry-group", claim_isometry_group},
      {"relation-witnesses", claim_relation_witnesses},
      {"admissibility", claim_admissibility},
      {"render-faithfulness", claim_render_faithfulness},
  };
  return claims;
}

VerificationReport run_suite(long p, const SuiteOptions& options) {
  require_odd_base(p);
  VerificationReport report;
  report.p = p;
  report.seed = options.seed;
  for (const ClaimSpec& c : suite_claims()) report.claims.push_back(c.run(p, options));
  return report;
}

VerificationReport run_suite(long p, std::uint64_t seed) {
  SuiteOptions o;
  o.seed = seed;
  o.levels = SuiteLevels::defaults(p);
  return run_suite(p, o);
}

}  // namespace sierpinski
