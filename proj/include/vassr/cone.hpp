#pragma once

// Exact rational cone geometry in dimension <= 3.
//
// An OpenCone is the set of strictly positive rational combinations of ALL
// its generators; equivalently the relative interior of the closed cone the
// generators span.  Membership and distance predicates are decided by exact
// rational LPs; facet enumeration uses 3-D cross products; intersections run
// through a small incremental double-description conversion.

#include <cstddef>
#include <iterator>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "vassr/basics.hpp"
#include "vassr/simplex.hpp"

namespace vassr {

struct OpenCone {
  // Empty generator list denotes the empty cone.
  std::vector<IntVec> generators;

  bool empty() const { return generators.empty(); }
  std::size_t dimension() const {
    return generators.empty() ? 0 : generators.front().size();
  }
};

struct HalfSpaceNormal {
  IntVec a;  // nonzero; defines H_a = { x : <a,x> > 0 }
};

struct NotFullDim : std::runtime_error {
  NotFullDim() : std::runtime_error("cone is not full-dimensional") {}
};

struct NotDisjoint : std::runtime_error {
  NotDisjoint() : std::runtime_error("cones are not disjoint") {}
};

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

// x in relint(cone(generators)): exists r_i > 0 with sum r_i e_i = x.
// Decided by maximizing t subject to r_i >= t (and t <= 1 to bound the
// objective); membership iff the optimum is strictly positive.
inline bool cone_member(const OpenCone& c, const RatVec& x) {
  if (c.empty()) return false;
  std::size_t d = c.dimension();
  if (x.size() != d) throw std::invalid_argument("cone_member: dim mismatch");
  std::size_t n = c.generators.size();
  // Variables: s_0..s_{n-1} (= r_i - t), t, u; constraints:
  //   sum_i s_i e_i + t*(sum e_i) = x        (d rows)
  //   t + u = 1
  std::vector<RatVec> a(d + 1, RatVec(n + 2, Rat(0)));
  RatVec b(d + 1);
  IntVec gensum = zero_vec(d);
  for (const IntVec& g : c.generators) gensum = add_vec(gensum, g);
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t i = 0; i < n; ++i) a[row][i] = Rat(c.generators[i][row]);
    a[row][n] = Rat(gensum[row]);
    b[row] = x[row];
  }
  a[d][n] = 1;
  a[d][n + 1] = 1;
  b[d] = 1;
  RatVec obj(n + 2, Rat(0));
  obj[n] = 1;
  LpResult r = simplex_solve(std::move(a), std::move(b), std::move(obj));
  return r.status == LpStatus::Optimal && r.objective > 0;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline bool cone_member(const OpenCone& c, const IntVec& x) {
  return cone_member(c, to_rat(x));
}

// Open cones disjoint?  Maximize t subject to sum r_i e_i - sum s_j f_j = 0
// with r_i, s_j >= t, t <= 1; a strictly positive optimum exhibits a common
// point, t = 0 (always feasible) means the relative interiors are disjoint.
inline bool cones_disjoint(const OpenCone& c1, const OpenCone& c2) {
  if (c1.empty() || c2.empty()) return true;
  std::size_t d = c1.dimension();
  std::size_t n1 = c1.generators.size(), n2 = c2.generators.size();
  std::vector<RatVec> a(d + 1, RatVec(n1 + n2 + 2, Rat(0)));
  RatVec b(d + 1, Rat(0));
  IntVec sum = zero_vec(d);
  for (const IntVec& g : c1.generators) sum = add_vec(sum, g);
  for (const IntVec& g : c2.generators) sum = sub_vec(sum, g);
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t i = 0; i < n1; ++i) a[row][i] = Rat(c1.generators[i][row]);
    for (std::size_t j = 0; j < n2; ++j)
      a[row][n1 + j] = Rat(-c2.generators[j][row]);
    a[row][n1 + n2] = Rat(sum[row]);
  }
  a[d][n1 + n2] = 1;
  a[d][n1 + n2 + 1] = 1;
  b[d] = 1;
  RatVec obj(n1 + n2 + 2, Rat(0));
  obj[n1 + n2] = 1;
  LpResult r = simplex_solve(std::move(a), std::move(b), std::move(obj));
  return !(r.status == LpStatus::Optimal && r.objective > 0);
}

// ---------------------------------------------------------------------------
// Double description (dimension <= 3)
// ---------------------------------------------------------------------------

// Generators of a closed polyhedral cone: free lines plus extreme rays.
struct ConeGenerators {
  std::vector<IntVec> lines;
  std::vector<IntVec> rays;

  std::vector<IntVec> as_rays() const {
    std::vector<IntVec> out = rays;
    for (const IntVec& l : lines) {
      out.push_back(l);
      out.push_back(neg_vec(l));
    }
    return out;
  }
};

namespace detail {

// Incremental double description: generators of { x : <n,x> >= 0 for all
// halfspace normals n }, starting from the full space.  Standard algorithm
// with the combinatorial adjacency test on tight sets.
inline ConeGenerators dual_rays(const std::vector<IntVec>& normals,
                                std::size_t d) {
  struct Ray {
    IntVec v;
    std::set<std::size_t> tight;  // processed constraints tight at v
  };
  std::vector<IntVec> lines;
  for (std::size_t i = 0; i < d; ++i) {
    IntVec e = zero_vec(d);
    e[i] = 1;
    lines.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  for (std::size_t ci = 0; ci < normals.size(); ++ci) {
    const IntVec& nrm = normals[ci];
    // Case 1: some line leaves the hyperplane; use it to slice the
    // lineality space and fold existing rays onto the hyperplane.
    std::size_t li = lines.size();
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (dot(nrm, lines[i]) != 0) {
        li = i;
        break;
      }
    if (li < lines.size()) {
      IntVec l0 = lines[li];
      Int a0 = dot(nrm, l0);
      if (a0 < 0) {
        l0 = neg_vec(l0);
        a0 = -a0;
      }
      std::vector<IntVec> new_lines;
      for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i == li) continue;
        Int ai = dot(nrm, lines[i]);
        new_lines.push_back(primitive_int(
            sub_vec(scale_vec(a0, lines[i]), scale_vec(ai, l0))));
      }
      for (Ray& r : rays) {
        Int ar = dot(nrm, r.v);
        r.v = primitive_int(sub_vec(scale_vec(a0, r.v), scale_vec(ar, l0)));
        r.tight.insert(ci);
      }
      Ray fresh;
      fresh.v = primitive_int(l0);
      // l0 lay in the lineality space, so every constraint processed so
      // far is tight at it (but not the current one, which sliced it off).
      for (std::size_t j = 0; j < ci; ++j) fresh.tight.insert(j);
      rays.push_back(std::move(fresh));
      lines = std::move(new_lines);
      continue;
    }
    // Case 2: all lines lie on the hyperplane; split rays by sign.
    std::vector<Ray> plus, zero, minus;
    for (const Ray& r : rays) {
      Int s = dot(nrm, r.v);
      if (s > 0)
        plus.push_back(r);
      else if (s == 0) {
        Ray z = r;
        z.tight.insert(ci);
        zero.push_back(std::move(z));
      } else
        minus.push_back(r);
    }
    std::vector<Ray> next = plus;
    for (Ray& r : zero) next.push_back(std::move(r));
    // Adjacent (+,-) pairs combine into new boundary rays.  Adjacency:
    // no third ray's tight set contains the pair's common tight set.
    for (const Ray& rp : plus) {
      for (const Ray& rm : minus) {
        std::set<std::size_t> common;
        std::set_intersection(rp.tight.begin(), rp.tight.end(),
                              rm.tight.begin(), rm.tight.end(),
                              std::inserter(common, common.begin()));
        bool adjacent = true;
        for (const Ray& other : rays) {
          if (other.v == rp.v || other.v == rm.v) continue;
          bool contains = std::includes(other.tight.begin(),
                                        other.tight.end(), common.begin(),
                                        common.end());
          if (contains) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        Int sp = dot(nrm, rp.v), sm = dot(nrm, rm.v);
        IntVec v = sub_vec(scale_vec(sp, rm.v), scale_vec(sm, rp.v));
        if (is_zero_vec(v)) continue;
        Ray combined;
        combined.v = primitive_int(std::move(v));
        combined.tight = common;
        combined.tight.insert(ci);
        next.push_back(std::move(combined));
      }
    }
    // Deduplicate directions.
    std::set<IntVec> seen;
    std::vector<Ray> dedup;
    for (Ray& r : next) {
      if (seen.insert(r.v).second) dedup.push_back(std::move(r));
    }
    rays = std::move(dedup);
  }
  ConeGenerators out;
  out.lines = std::move(lines);
  for (Ray& r : rays) out.rays.push_back(std::move(r.v));
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  std::sort(out.lines.begin(), out.lines.end(), lex_less);
  return out;
}

// Halfspace description of the closed cone spanned by `gens`: normals of
// the dual cone.  Dual lines contribute a pair of opposite inequalities
// (i.e. an equality).
inline std::vector<IntVec> closed_cone_halfspaces(
    const std::vector<IntVec>& gens, std::size_t d) {
  ConeGenerators dual = dual_rays(gens, d);
  std::vector<IntVec> hs = dual.rays;
  for (const IntVec& l : dual.lines) {
    hs.push_back(l);
    hs.push_back(neg_vec(l));
  }
  return hs;
}

}  // namespace detail

// Generators (lines + extreme rays) of the intersection of two closed
// cones given by generator lists, via the double description method.
inline ConeGenerators intersect_closed_cones(const std::vector<IntVec>& g1,
                                             const std::vector<IntVec>& g2,
                                             std::size_t d) {
  std::vector<IntVec> hs = detail::closed_cone_halfspaces(g1, d);
  std::vector<IntVec> hs2 = detail::closed_cone_halfspaces(g2, d);
  hs.insert(hs.end(), hs2.begin(), hs2.end());
  return detail::dual_rays(hs, d);
}

// ---------------------------------------------------------------------------
// Facets (dimension 3)
// ---------------------------------------------------------------------------

inline IntVec cross(const IntVec& a, const IntVec& b) {
  return IntVec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                a[0] * b[1] - a[1] * b[0]};
}

// A primitive integer vector orthogonal to every vector of `vs`
// (dimension 3; requires rank(vs) <= 2).  Rank 2: a cross product of two
// independent vectors; rank 1: a cross product with a coordinate axis;
// rank 0: the third axis.
inline IntVec orthogonal_complement_normal(const std::vector<IntVec>& vs) {
  std::vector<IntVec> nz;
  for (const IntVec& v : vs)
    if (!is_zero_vec(v)) nz.push_back(v);
  int rank = rank_of(nz);
  if (rank >= 3)
    throw std::invalid_argument("orthogonal_complement_normal: full rank");
  if (rank == 2) {
    for (std::size_t i = 0; i < nz.size(); ++i)
      for (std::size_t j = i + 1; j < nz.size(); ++j) {
        IntVec a = cross(nz[i], nz[j]);
        if (!is_zero_vec(a)) return primitive_int(std::move(a));
      }
  }
  if (rank == 1) {
    for (const IntVec& e : nz) {
      for (std::size_t axis = 0; axis < 3; ++axis) {
        IntVec unit = zero_vec(3);
        unit[axis] = 1;
        IntVec a = cross(e, unit);
        if (!is_zero_vec(a)) return primitive_int(std::move(a));
      }
    }
  }
  return IntVec{Int(0), Int(0), Int(1)};
}

// Facet normals of a full-dimensional cone in dimension 3.  Candidates are
// pairwise cross products of generators, oriented toward the cone; a
// candidate is a real facet when its tight generator set still spans a
// plane.  The open cone equals the intersection of the open halfspaces.
inline std::vector<HalfSpaceNormal> facet_normals(const OpenCone& c) {
  if (c.dimension() != 3 || rank_of(c.generators) != 3) throw NotFullDim();
  std::set<IntVec> result;
  const auto& g = c.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      IntVec a = cross(g[i], g[j]);
      if (is_zero_vec(a)) continue;
      a = primitive_int(std::move(a));
      bool any_pos = false, any_neg = false;
      for (const IntVec& h : g) {
        Int s = dot(a, h);
        if (s > 0) any_pos = true;
        if (s < 0) any_neg = true;
      }
      if (any_pos && any_neg) continue;  // not supporting
      if (any_neg) a = neg_vec(a);       // orient toward the cone
      // Facet test: tight generators span a plane.
      std::vector<IntVec> tight;
      for (const IntVec& h : g)
        if (dot(a, h) == 0) tight.push_back(h);
      if (rank_of(tight) == 2) result.insert(std::move(a));
    }
  }
  std::vector<HalfSpaceNormal> out;
  for (const IntVec& a : result) out.push_back(HalfSpaceNormal{a});
  return out;
}

// ---------------------------------------------------------------------------
// Sequential cones
// ---------------------------------------------------------------------------

// C_1 = cone(V_1) ∩ open orthant, C_i = (C_{i-1} + cone(V_i)) ∩ open
// orthant, all cones open.  The Minkowski sum concatenates generator lists;
// the intersection runs through the closed double-description conversion,
// with a relative-interior sample test deciding whether the open sets
// actually meet (if they do not, the open intersection is empty).
inline OpenCone sequential_cone(const std::vector<OpenCone>& cones,
                                std::size_t d = 3) {
  OpenCone cur;  // empty until the first component is folded in
  bool first = true;
  for (const OpenCone& comp : cones) {
    if (comp.empty()) return OpenCone{};
    std::vector<IntVec> sum_gens;
    if (first) {
      sum_gens = comp.generators;
      first = false;
    } else {
      if (cur.empty()) return OpenCone{};
      sum_gens = cur.generators;
      sum_gens.insert(sum_gens.end(), comp.generators.begin(),
                      comp.generators.end());
    }
    // Closed intersection with the nonnegative orthant.
    std::vector<IntVec> orthant;
    for (std::size_t i = 0; i < d; ++i) {
      IntVec e = zero_vec(d);
      e[i] = 1;
      orthant.push_back(std::move(e));
    }
    ConeGenerators inter = intersect_closed_cones(sum_gens, orthant, d);
    std::vector<IntVec> rays = inter.as_rays();
    if (rays.empty()) return OpenCone{};
    // Sample point in the relative interior of the closed intersection;
    // the open intersection is nonempty iff the sample lies in both open
    // sets, and then the rays generate it.
    IntVec sample = zero_vec(d);
    for (const IntVec& r : rays) sample = add_vec(sample, r);
    bool in_sum = cone_member(OpenCone{sum_gens}, sample);
    bool in_orthant = all_positive(sample);
    if (!in_sum || !in_orthant) return OpenCone{};
    cur = OpenCone{std::move(rays)};
  }
  return cur;
}

// Direct cascade-witness test (the definition-side view of the sequential
// cone, used as an independent cross-check): x is a member iff there are
// v_i in cone(V_i) whose partial sums are strictly positive everywhere and
// sum to x.  One LP: all combination coefficients and all partial sums
// >= t, maximize t.
inline bool cascade_member(const std::vector<OpenCone>& cones, const RatVec& x,
                           std::size_t d = 3) {
  if (cones.empty()) return false;
  for (const OpenCone& c : cones)
    if (c.empty()) return false;
  std::size_t k = cones.size();
  std::size_t nvars = 0;
  std::vector<std::size_t> offset(k);
  for (std::size_t j = 0; j < k; ++j) {
    offset[j] = nvars;
    nvars += cones[j].generators.size();
  }
  // Variables: s_0..s_{nvars-1} (coefficients minus t), t, u, and one
  // surplus variable per strict partial-sum constraint.
  std::size_t strict_rows = (k - 1) * d;  // full sum handled by equality to x
  std::size_t total = nvars + 2 + strict_rows;
  std::vector<RatVec> a;
  RatVec b;
  auto gen_coord = [&](std::size_t j, std::size_t i, std::size_t row) {
    return Rat(cones[j].generators[i][row]);
  };
  // Full sum equality: sum over all components = x   (substituting
  // r = s + t folds a t * (sum of all generators) term in).
  for (std::size_t row = 0; row < d; ++row) {
    RatVec arow(total, Rat(0));
    Rat tcoef(0);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < cones[j].generators.size(); ++i) {
        arow[offset[j] + i] = gen_coord(j, i, row);
        tcoef += gen_coord(j, i, row);
      }
    arow[nvars] = tcoef;
    a.push_back(std::move(arow));
    b.push_back(x[row]);
  }
  // Strict partial sums: prefix sum - t - surplus = 0 for prefixes 1..k-1.
  std::size_t srow = 0;
  for (std::size_t pre = 1; pre < k; ++pre) {
    for (std::size_t row = 0; row < d; ++row) {
      RatVec arow(total, Rat(0));
      Rat tcoef(0);
      for (std::size_t j = 0; j < pre; ++j)
        for (std::size_t i = 0; i < cones[j].generators.size(); ++i) {
          arow[offset[j] + i] = gen_coord(j, i, row);
          tcoef += gen_coord(j, i, row);
        }
      arow[nvars] = tcoef - 1;  // minus t for the strictness margin
      arow[nvars + 2 + srow] = -1;
      a.push_back(std::move(arow));
      b.push_back(Rat(0));
      ++srow;
    }
  }
  // t + u = 1.
  {
    RatVec arow(total, Rat(0));
    arow[nvars] = 1;
    arow[nvars + 1] = 1;
    a.push_back(std::move(arow));
    b.push_back(Rat(1));
  }
  RatVec obj(total, Rat(0));
  obj[nvars] = 1;
  LpResult r = simplex_solve(std::move(a), std::move(b), std::move(obj));
  if (!(r.status == LpStatus::Optimal && r.objective > 0)) return false;
  // x itself must be strictly positive (it is the k-th partial sum).
  for (const Rat& q : x)
    if (q <= 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Wideness and distance predicates
// ---------------------------------------------------------------------------

// Open positive orthant included in the open cone?  Full-dimensional case:
// every facet normal componentwise >= 0; lower-dimensional cones can never
// include the orthant.
inline bool contains_open_orthant(const OpenCone& c) {
  if (c.empty()) return false;
  if (rank_of(c.generators) != (int)c.dimension()) return false;
  for (const HalfSpaceNormal& h : facet_normals(c))
    if (!all_nonneg(h.a)) return false;
  return true;
}

// Some y in the closure of the cone with |x - y|_inf <= D?
inline bool within_distance_of_cone(const IntVec& x, const OpenCone& c,
                                    const Rat& D) {
  if (c.empty()) return false;
  if (D < 0) return false;
  std::size_t d = c.dimension();
  std::size_t n = c.generators.size();
  // Variables: lambda_0..n-1, s_0..d-1, u_0..d-1:
  //   sum lambda g[row] + s_row = x_row + D,   s_row + u_row = 2D.
  std::size_t total = n + 2 * d;
  std::vector<RatVec> a;
  RatVec b;
  for (std::size_t row = 0; row < d; ++row) {
    RatVec arow(total, Rat(0));
    for (std::size_t i = 0; i < n; ++i) arow[i] = Rat(c.generators[i][row]);
    arow[n + row] = 1;
    a.push_back(std::move(arow));
    b.push_back(Rat(x[row]) + D);
  }
  for (std::size_t row = 0; row < d; ++row) {
    RatVec arow(total, Rat(0));
    arow[n + row] = 1;
    arow[n + d + row] = 1;
    a.push_back(std::move(arow));
    b.push_back(D * 2);
  }
  return lp_feasible(std::move(a), std::move(b));
}

// |x - y|_inf <= D for some y on the plane <a, y> = 0?
inline bool within_distance_of_plane(const RatVec& x, const IntVec& a_normal,
                                     const Rat& D) {
  std::size_t d = x.size();
  // y = yp - ym (free variable split), <a,y> = 0, |x - y| <= D per row.
  // Variables: yp_0..d-1, ym_0..d-1, s_0..d-1, u_0..d-1.
  std::size_t total = 4 * d;
  std::vector<RatVec> a;
  RatVec b;
  {
    RatVec arow(total, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
      arow[i] = Rat(a_normal[i]);
      arow[d + i] = Rat(-a_normal[i]);
    }
    a.push_back(std::move(arow));
    b.push_back(Rat(0));
  }
  for (std::size_t row = 0; row < d; ++row) {
    RatVec arow(total, Rat(0));
    arow[row] = 1;
    arow[d + row] = -1;
    arow[2 * d + row] = 1;
    a.push_back(std::move(arow));
    b.push_back(x[row] + D);
  }
  for (std::size_t row = 0; row < d; ++row) {
    RatVec arow(total, Rat(0));
    arow[2 * d + row] = 1;
    arow[3 * d + row] = 1;
    a.push_back(std::move(arow));
    b.push_back(D * 2);
  }
  return lp_feasible(std::move(a), std::move(b));
}

inline bool within_distance_of_cone_rat(const RatVec& x, const OpenCone& c,
                                        const Rat& D) {
  // Rational-point variant used by the separating-facet sampler.
  if (c.empty() || D < 0) return false;
  std::size_t d = c.dimension();
  std::size_t n = c.generators.size();
  std::size_t total = n + 2 * d;
  std::vector<RatVec> a;
  RatVec b;
  for (std::size_t row = 0; row < d; ++row) {
    RatVec arow(total, Rat(0));
    for (std::size_t i = 0; i < n; ++i) arow[i] = Rat(c.generators[i][row]);
    arow[n + row] = 1;
    a.push_back(std::move(arow));
    b.push_back(x[row] + D);
  }
  for (std::size_t row = 0; row < d; ++row) {
    RatVec arow(total, Rat(0));
    arow[n + row] = 1;
    arow[n + d + row] = 1;
    a.push_back(std::move(arow));
    b.push_back(D * 2);
  }
  return lp_feasible(std::move(a), std::move(b));
}

// A facet normal a of c1 such that every sampled point within distance D
// of both cones lies within 3D of the plane <a,.> = 0.  Preconditions:
// both cones full-dimensional and disjoint.  Sample points are midpoints
// of close pairs drawn from small-coefficient combinations of the two
// generator sets.
inline HalfSpaceNormal separating_facet(const OpenCone& c1, const OpenCone& c2,
                                        const Rat& D) {
  if (rank_of(c1.generators) != 3 || rank_of(c2.generators) != 3)
    throw NotFullDim();
  if (!cones_disjoint(c1, c2)) throw NotDisjoint();
  std::vector<HalfSpaceNormal> facets = facet_normals(c1);
  if (facets.empty()) throw NotFullDim();
  // Deterministic sample generation: integer points of closure(c1)
  // obtained as bounded generator combinations, kept when they are within
  // D of c2 as well (then trivially within D of both cones).
  std::vector<RatVec> samples;
  std::size_t n1 = c1.generators.size();
  std::vector<std::size_t> idx(n1, 0);
  const std::size_t coeff_cap = n1 <= 3 ? 4 : (n1 <= 5 ? 3 : 2);
  while (true) {
    IntVec p = zero_vec(3);
    for (std::size_t i = 0; i < n1; ++i)
      p = add_vec(p, scale_vec(Int((unsigned long)idx[i]), c1.generators[i]));
    if (!is_zero_vec(p) && within_distance_of_cone_rat(to_rat(p), c2, D))
      samples.push_back(to_rat(p));
    std::size_t i = 0;
    while (i < n1 && ++idx[i] > coeff_cap) idx[i++] = 0;
    if (i == n1) break;
    if (samples.size() >= 64) break;
  }
  // Prefer the first facet consistent with every sample; fall back to the
  // one with the fewest violations.
  std::size_t best = 0, best_viol = (std::size_t)-1;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    std::size_t viol = 0;
    for (const RatVec& x : samples)
      if (!within_distance_of_plane(x, facets[f].a, D * 3)) ++viol;
    if (viol == 0) return facets[f];
    if (viol < best_viol) {
      best_viol = viol;
      best = f;
    }
  }
  return facets[best];
}

}  // namespace vassr
