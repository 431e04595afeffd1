#include "toric/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "core/lex.hpp"

namespace valkit {

namespace {

std::int64_t dot(const Expo& a, const Expo& b) {
  if (a.size() != b.size()) fail(ErrCode::internal, "pairing arity mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// ceil(p / q) for q > 0
std::int64_t ceil_div(std::int64_t p, std::int64_t q) {
  std::int64_t d = p / q;
  if (p % q != 0 && p > 0) ++d;
  return d;
}

std::int64_t family_max_coord(const AntichainFamily& family) {
  std::int64_t m = 0;
  for (const auto& [id, a] : family.entries)
    for (const Expo& e : a.elements())
      for (std::int64_t x : e) m = std::max(m, x);
  return m;
}

std::vector<std::int64_t> first_primes(std::size_t n) {
  std::vector<std::int64_t> ps;
  for (std::int64_t c = 2; ps.size() < n; ++c) {
    bool prime = true;
    for (std::int64_t q : ps) {
      if (q * q > c) break;
      if (c % q == 0) {
        prime = false;
        break;
      }
    }
    if (prime) ps.push_back(c);
  }
  return ps;
}

// directed walls (s, t): codimension-one intersections, plus the ray of t
// opposite the wall
struct Wall {
  std::size_t s, t;
  int opp;
};

std::vector<Wall> directed_walls(const Fan& fan) {
  std::vector<Wall> walls;
  int d = fan.dim;
  for (std::size_t s = 0; s < fan.facets.size(); ++s)
    for (std::size_t t = 0; t < fan.facets.size(); ++t) {
      if (s == t) continue;
      std::vector<int> inter;
      std::set_intersection(fan.facets[s].begin(), fan.facets[s].end(),
                            fan.facets[t].begin(), fan.facets[t].end(),
                            std::back_inserter(inter));
      if (static_cast<int>(inter.size()) != d - 1) continue;
      for (int r : fan.facets[t])
        if (std::find(inter.begin(), inter.end(), r) == inter.end())
          walls.push_back({s, t, r});
    }
  return walls;
}

// value the functional of cone t minus the functional of cone s assigns to
// the ray of t opposite their shared wall; positive slack = upward bend
std::int64_t wall_slack(const Fan& fan, const PiecewiseLinear& h,
                        const Wall& w) {
  return dot(h.facet_functionals[w.t], fan.rays[w.opp]) -
         dot(h.facet_functionals[w.s], fan.rays[w.opp]);
}

// per-ray values of a conewise linear function, erroring if the declared
// facet functionals disagree on a shared ray
std::vector<std::int64_t> functional_ray_values(const Fan& fan,
                                                const PiecewiseLinear& h,
                                                const char* name) {
  if (h.facet_functionals.size() != fan.facets.size())
    fail(ErrCode::validation,
         std::string(name) + " needs one functional per maximal cone");
  for (const Expo& u : h.facet_functionals)
    if (static_cast<int>(u.size()) != fan.dim)
      fail(ErrCode::dimension,
           std::string(name) + " has a functional of the wrong arity");
  std::vector<std::optional<std::int64_t>> val(fan.rays.size());
  for (std::size_t fc = 0; fc < fan.facets.size(); ++fc)
    for (int r : fan.facets[fc]) {
      std::int64_t v = dot(h.facet_functionals[fc], fan.rays[r]);
      if (val[r] && *val[r] != v)
        fail(ErrCode::validation,
             std::string(name) +
                 " is not conewise linear: functionals disagree on ray " +
                 Fan::ray_id(r));
      val[r] = v;
    }
  std::vector<std::int64_t> out;
  out.reserve(val.size());
  for (auto& v : val) out.push_back(*v);
  return out;
}

// chart exponents of a character at a facet: <m, n_i> over the facet's rays
Expo chart_exponents(const Fan& fan, std::size_t facet, const Expo& m) {
  Expo p(fan.dim);
  for (int i = 0; i < fan.dim; ++i)
    p[i] = dot(m, fan.rays[fan.facets[facet][i]]);
  return p;
}

// Does the denominator with this exponent set stay a unit (after the
// monomial shift) in the chart of every facet? Holds iff the componentwise
// minimum of the chart exponents is attained by a single exponent.
bool den_attained_everywhere(const Fan& fan,
                             const std::vector<std::vector<Expo>>& dens) {
  for (std::size_t s = 0; s < fan.facets.size(); ++s)
    for (std::size_t t = 0; t < fan.facets.size(); ++t) {
      std::vector<Expo> ps;
      Expo gamma(fan.dim, INT64_MAX);
      for (const Expo& m : dens[s]) {
        Expo p = chart_exponents(fan, t, m);
        for (int i = 0; i < fan.dim; ++i)
          gamma[i] = std::min(gamma[i], p[i]);
        ps.push_back(std::move(p));
      }
      if (std::find(ps.begin(), ps.end(), gamma) == ps.end()) return false;
    }
  return true;
}

// Lattice points of the polytope {m : <m, n_rho> >= -c_rho}. The polytope
// is the one of a nef divisor: its vertices sit at the facets of the fan,
// which gives exact integer bounds for the enumeration.
std::vector<Expo> nef_polytope_points(const Fan& fan,
                                      const std::vector<std::int64_t>& c) {
  int d = fan.dim;
  std::vector<Expo> verts;
  for (std::size_t f = 0; f < fan.facets.size(); ++f) {
    // vertex v with <v, n_i> = -c_{rho_i} for the facet's rays
    Expo v(d, 0);
    std::vector<Expo> dual = fan.facet_dual(f);
    for (int j = 0; j < d; ++j) {
      std::int64_t cj = c[fan.facets[f][j]];
      for (int i = 0; i < d; ++i) v[i] -= cj * dual[j][i];
    }
    verts.push_back(std::move(v));
  }
  Expo lo = verts.front(), hi = verts.front();
  for (const Expo& v : verts)
    for (int i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  std::vector<Expo> pts;
  Expo cur = lo;
  while (true) {
    bool inside = true;
    for (std::size_t r = 0; r < fan.rays.size() && inside; ++r)
      inside = dot(cur, fan.rays[r]) >= -c[r];
    if (inside) pts.push_back(cur);
    int i = d - 1;
    while (i >= 0 && cur[i] == hi[i]) {
      cur[i] = lo[i];
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  if (pts.empty()) fail(ErrCode::internal, "empty denominator polytope");
  return pts;
}

}  // namespace

bool is_strictly_convex(const Fan& fan, const PiecewiseLinear& h) {
  functional_ray_values(fan, h, "h");
  for (const Wall& w : directed_walls(fan))
    if (wall_slack(fan, h, w) <= 0) return false;
  return true;
}

ToricCandidate toric_construct(const ConeComplex& complex,
                               const AntichainFamily& family, long long ell,
                               std::map<std::string, Rat> lambda,
                               DenStyle style) {
  if (!complex.fan() || complex.fan_support() != FanSupport::complete)
    fail(ErrCode::validation,
         "the approximation pipeline needs a complete embedded fan");
  if (ell < 1) fail(ErrCode::validation, "ell must be at least 1");
  CoherenceReport coh = is_coherent(family, complex);
  if (!coh.coherent) {
    std::string msg = "family is not coherent";
    if (!coh.violations.empty())
      msg += ": at " + coh.violations.front().tau + ": " +
             coh.violations.front().detail;
    fail(ErrCode::validation, msg);
  }

  const Fan& fan = *complex.fan();
  std::size_t nf = fan.facets.size();

  std::vector<std::vector<Expo>> duals;
  for (std::size_t f = 0; f < nf; ++f) duals.push_back(fan.facet_dual(f));

  // the textbook denominator: 1 plus the chart coordinates of the cone
  std::vector<std::vector<Expo>> dens(nf);
  for (std::size_t f = 0; f < nf; ++f) {
    dens[f].push_back(Expo(fan.dim, 0));
    for (const Expo& m : duals[f]) dens[f].push_back(m);
  }

  bool want_adapted = false;
  if (style == DenStyle::adapted) {
    want_adapted = true;
  } else if (style == DenStyle::automatic) {
    // the simplex shape only stays a unit in every chart when each pair of
    // cones is close enough; otherwise switch to the adapted polytopes
    want_adapted = !den_attained_everywhere(fan, dens);
  }
  if (want_adapted) {
    PiecewiseLinear g = ones_functional(fan);
    if (!is_strictly_convex(fan, g)) {
      if (style == DenStyle::adapted)
        fail(ErrCode::unsupported,
             "adapted denominators need a strictly convex support function "
             "and the standard one is not strictly convex on this fan");
      // keep the simplex denominators; verification will surface any
      // unit-factorization failure with diagnostics
    } else {
      std::vector<std::int64_t> gval = functional_ray_values(fan, g, "g");
      for (std::size_t f = 0; f < nf; ++f) {
        // c_rho = g(n_rho) - <u_f^g, n_rho>: zero on the cone's own rays,
        // positive elsewhere, convex; its polytope is regular in all charts
        std::vector<std::int64_t> c(fan.rays.size());
        for (std::size_t r = 0; r < fan.rays.size(); ++r)
          c[r] = gval[r] - dot(g.facet_functionals[f], fan.rays[r]);
        dens[f] = nef_polytope_points(fan, c);
      }
    }
  }

  ToricCandidate cand;
  cand.fan = fan;
  cand.ell = ell;
  for (std::size_t f = 0; f < nf; ++f) {
    std::string id = complex.facet_face_id(f);
    auto lit = lambda.find(id);
    if (lit == lambda.end() || lit->second == 0)
      fail(ErrCode::validation,
           "need a nonzero coefficient for maximal cone " + id);
    ToricCandidate::FacetData fd;
    fd.id = id;
    fd.dual = duals[f];
    fd.den_exps = dens[f];
    for (const Expo& el : family.entries.at(id).elements()) {
      Expo m(fan.dim, 0);
      for (std::size_t j = 0; j < fd.dual.size(); ++j)
        for (int r = 0; r < fan.dim; ++r) m[r] += el[j] * fd.dual[j][r];
      fd.num_exps.push_back(std::move(m));
    }
    cand.data.push_back(std::move(fd));
  }
  if (lambda.size() != nf)
    fail(ErrCode::validation, "coefficient given for an unknown cone id");
  cand.lambda = std::move(lambda);
  return cand;
}

MonomialSeries local_expand(const ToricCandidate& cand, std::size_t facet_idx,
                            const Expo& box, ExpansionCache* cache) {
  const Fan& fan = cand.fan;
  if (facet_idx >= fan.facets.size())
    fail(ErrCode::index_mismatch, "no such maximal cone");
  int d = fan.dim;
  if (static_cast<int>(box.size()) != d)
    fail(ErrCode::dimension, "box arity must match the fan dimension");
  for (std::int64_t b : box)
    if (b < 0) fail(ErrCode::domain, "box entries must be nonnegative");
  const auto& tf = fan.facets[facet_idx];
  const std::string& tid = cand.data[facet_idx].id;
  std::vector<std::string> vars;
  for (int i : tf) vars.push_back(Fan::ray_id(i));

  MonomialSeries acc = MonomialSeries::zero(vars);
  for (std::size_t s = 0; s < cand.data.size(); ++s) {
    const auto& fd = cand.data[s];

    // denominator exponents in the target chart and their joint shift
    std::vector<Expo> qexp;
    Expo gamma(d, INT64_MAX);
    for (const Expo& m : fd.den_exps) {
      Expo p = chart_exponents(fan, facet_idx, m);
      for (int i = 0; i < d; ++i) gamma[i] = std::min(gamma[i], p[i]);
      qexp.push_back(std::move(p));
    }

    MonomialSeries qt = MonomialSeries::zero(vars);
    for (const Expo& p : qexp) {
      Expo e(d);
      for (int i = 0; i < d; ++i) e[i] = p[i] - gamma[i];
      qt.add_term(e, Rat(1));
    }
    if (qt.coeff(Expo(d, 0)) == 0)
      fail(ErrCode::not_a_unit,
           "denominator of cone " + fd.id +
               " has no unit factorization in the chart of " + tid);
    qt = qt.truncate(box);

    MonomialSeries inv = MonomialSeries::zero(vars);
    bool cached = false;
    auto key = std::make_tuple(s, facet_idx, static_cast<long long>(cand.ell),
                               box, fd.den_exps);
    if (cache) {
      auto it = cache->inv_pows.find(key);
      if (it != cache->inv_pows.end()) {
        inv = it->second;
        cached = true;
      }
    }
    if (!cached) {
      inv = qt.invert_unit(box);
      for (long long t = 1; t < cand.ell; ++t)
        inv = inv.divide_unit_truncated(qt, box);
      if (cache) cache->inv_pows.emplace(key, inv);
    }

    MonomialSeries nums = MonomialSeries::zero(vars);
    bool any = false;
    for (const Expo& m : fd.num_exps) {
      Expo delta(d);
      bool neg = false, inside = true;
      for (int i = 0; i < d; ++i) {
        std::int64_t e = dot(m, fan.rays[tf[i]]) - cand.ell * gamma[i];
        if (e < 0) neg = true;
        if (e > box[i]) inside = false;
        delta[i] = e;
      }
      if (neg)
        fail(ErrCode::non_regular, "a numerator term of cone " + fd.id +
                                       " is not regular in the chart of " +
                                       tid + "; increase ell");
      if (inside) {
        nums.add_term(delta, Rat(1));
        any = true;
      }
    }
    if (any) acc += cand.lambda.at(fd.id) * nums.mul_truncated(inv, box);
  }
  return acc;
}

VerificationReport verify(const ToricCandidate& cand,
                          const ConeComplex& complex,
                          const AntichainFamily& family, std::uint64_t seed,
                          int samples_per_face, ExpansionCache* cache) {
  const Fan& fan = cand.fan;
  int d = fan.dim;
  for (const auto& fd : cand.data)
    if (!complex.has_face(fd.id))
      fail(ErrCode::validation,
           "candidate names a cone the complex does not have: " + fd.id);
  for (const auto& [id, face] : complex.faces()) {
    auto it = family.entries.find(id);
    if (it == family.entries.end())
      fail(ErrCode::validation, "family has no entry for face " + id);
    if (it->second.index_set() != face.rays)
      fail(ErrCode::validation,
           "family entry at " + id + " is not indexed by the face's rays");
  }
  VerificationReport rep;
  rep.ell = cand.ell;
  rep.lambda = cand.lambda;
  rep.seed = seed;
  rep.samples_per_face = samples_per_face;

  std::int64_t maxpair = 1;
  for (const auto& fd : cand.data) {
    for (const Expo& m : fd.dual)
      for (const Expo& n : fan.rays)
        maxpair = std::max(maxpair, std::abs(dot(m, n)));
    for (const Expo& m : fd.den_exps)
      for (const Expo& n : fan.rays)
        maxpair = std::max(maxpair, std::abs(dot(m, n)));
  }
  rep.box_side = family_max_coord(family) + cand.ell * d * maxpair;
  Expo box(d, rep.box_side);

  rep.cross_exact = true;
  for (const auto& [id, l] : cand.lambda)
    if (l < 0) rep.cross_exact = false;

  bool pass = true;

  // every chart of the candidate, directly
  std::map<std::string, Antichain> facet_computed;
  for (std::size_t f = 0; f < fan.facets.size(); ++f) {
    const std::string& id = cand.data[f].id;
    FaceCheck fc;
    fc.face = id;
    fc.target = family.entries.at(id).elements();
    try {
      MonomialSeries ex = local_expand(cand, f, box, cache);
      if (ex.is_zero()) {
        rep.note = "candidate vanishes identically on the chart of " + id;
        pass = false;
      } else {
        Antichain a = ex.support_min();
        fc.computed = a.elements();
        fc.equal = (a == family.entries.at(id));
        if (!fc.equal) pass = false;
        facet_computed.emplace(id, std::move(a));
      }
    } catch (const Error& e) {
      if (e.code() != ErrCode::not_a_unit && e.code() != ErrCode::non_regular)
        throw;
      rep.note = e.what();
      pass = false;
    }
    rep.faces.push_back(std::move(fc));
    if (!rep.note.empty()) {
      rep.pass = false;
      return rep;  // the candidate itself is defective; nothing to compare
    }
  }

  // lower faces: project from every enclosing chart and insist they agree
  std::vector<std::string> facet_ids;
  for (const auto& fd : cand.data) facet_ids.push_back(fd.id);
  for (const auto& [id, face] : complex.faces()) {
    if (std::find(facet_ids.begin(), facet_ids.end(), id) != facet_ids.end())
      continue;
    FaceCheck fc;
    fc.face = id;
    fc.target = family.entries.at(id).elements();
    std::optional<Antichain> common;
    for (const std::string& pid : facet_ids) {
      if (!complex.is_subface(id, pid)) continue;
      Antichain proj = antichain_project(facet_computed.at(pid), face.rays);
      if (!common)
        common = std::move(proj);
      else if (*common != proj)
        fc.parents_agree = false;
    }
    if (!common) fail(ErrCode::internal, "face with no enclosing chart");
    fc.computed = common->elements();
    fc.equal = fc.parents_agree && (*common == family.entries.at(id));
    if (!fc.equal) pass = false;
    rep.faces.push_back(std::move(fc));
  }

  // random weight systems per face: the value the family predicts against
  // the value of the candidate, computed symbolically from its pieces with
  // no truncation involved
  Rng rng(seed);
  std::map<std::string, std::size_t> ray_index;
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    ray_index[Fan::ray_id(i)] = i;

  for (const auto& [id, face] : complex.faces()) {
    const Antichain& target = family.entries.at(id);
    for (int s = 0; s < samples_per_face; ++s) {
      std::size_t k = 1 + rng.below(3);
      std::vector<LexTuple> cols;
      for (std::size_t i = 0; i < face.rays.size(); ++i) {
        LexTuple col = LexTuple::zero(k);
        for (std::size_t t = 0; t < k; ++t) col.v[t] = rng.rational(-9, 9, 4);
        if (!lex_nonneg(col)) col = Rat(-1) * col;
        cols.push_back(std::move(col));
      }

      std::optional<LexTuple> predicted;
      for (const Expo& a : target.elements()) {
        LexTuple v = LexTuple::zero(k);
        for (std::size_t i = 0; i < cols.size(); ++i)
          v += Rat(a[i]) * cols[i];
        predicted = predicted ? lex_min(*predicted, v) : v;
      }

      auto char_val = [&](const Expo& m) {
        LexTuple v = LexTuple::zero(k);
        for (std::size_t i = 0; i < cols.size(); ++i)
          v += Rat(dot(m, fan.rays[ray_index.at(face.rays[i])])) * cols[i];
        return v;
      };
      std::optional<LexTuple> symbolic;
      for (const auto& fd : cand.data) {
        std::optional<LexTuple> num;
        for (const Expo& m : fd.num_exps) {
          LexTuple v = char_val(m);
          num = num ? lex_min(*num, v) : v;
        }
        std::optional<LexTuple> q;
        for (const Expo& m : fd.den_exps) {
          LexTuple v = char_val(m);
          q = q ? lex_min(*q, v) : v;
        }
        LexTuple val = *num - Rat(cand.ell) * (*q);
        symbolic = symbolic ? lex_min(*symbolic, val) : val;
      }

      bool ok = rep.cross_exact ? lex_eq(*symbolic, *predicted)
                                : lex_leq(*symbolic, *predicted);
      if (!ok) {
        pass = false;
        if (rep.cross_failures.size() < 8) {
          CrossSample cs;
          cs.face = id;
          for (auto& c : cols) cs.cols.push_back(c.v);
          cs.predicted = predicted->v;
          cs.symbolic = symbolic->v;
          rep.cross_failures.push_back(std::move(cs));
        }
      }
    }
  }

  rep.pass = pass;
  if (!pass && rep.note.empty()) rep.note = "verification found mismatches";
  return rep;
}

ApproxOutcome toric_approximate(
    const ConeComplex& complex, const AntichainFamily& family,
    std::optional<long long> ell_override,
    std::optional<std::map<std::string, Rat>> lambda_override,
    std::uint64_t seed, int samples_per_face, ExpansionCache* cache) {
  if (!complex.fan())
    fail(ErrCode::validation,
         "the approximation pipeline needs an embedded fan");
  const Fan& fan = *complex.fan();
  std::size_t nf = fan.facets.size();

  long long ell0 = static_cast<long long>(nf) * (1 + family_max_coord(family));
  if (ell0 < 1) ell0 = 1;

  enum class Mode { primes, rand100, rand1000, fixed };
  struct Attempt {
    long long ell;
    Mode mode;
  };
  std::vector<Attempt> plan;
  if (ell_override && lambda_override) {
    plan = {{*ell_override, Mode::fixed}};
  } else if (lambda_override) {
    plan = {{ell0, Mode::fixed},
            {2 * ell0, Mode::fixed},
            {4 * ell0, Mode::fixed}};
  } else if (ell_override) {
    plan = {{*ell_override, Mode::primes},
            {*ell_override, Mode::rand100},
            {*ell_override, Mode::rand1000}};
  } else {
    plan = {{ell0, Mode::primes},
            {2 * ell0, Mode::primes},
            {2 * ell0, Mode::rand100},
            {4 * ell0, Mode::rand1000},
            {8 * ell0, Mode::rand1000}};
  }

  ApproxOutcome out;
  std::vector<std::int64_t> primes = first_primes(nf);
  for (std::size_t at = 0; at < plan.size(); ++at) {
    std::map<std::string, Rat> lam;
    switch (plan[at].mode) {
      case Mode::fixed:
        lam = *lambda_override;
        break;
      case Mode::primes:
        for (std::size_t f = 0; f < nf; ++f)
          lam[complex.facet_face_id(f)] = Rat(primes[f]);
        break;
      case Mode::rand100:
      case Mode::rand1000: {
        std::int64_t hi = plan[at].mode == Mode::rand100 ? 100 : 1000;
        Rng r(Rng::mix(seed, 17 + at));
        std::set<std::int64_t> used;
        for (std::size_t f = 0; f < nf; ++f) {
          std::int64_t v = r.range(1, hi);
          while (used.count(v) && used.size() < static_cast<std::size_t>(hi))
            v = r.range(1, hi);
          used.insert(v);
          lam[complex.facet_face_id(f)] = Rat(v);
        }
        break;
      }
    }
    ToricCandidate cand = toric_construct(complex, family, plan[at].ell, lam);
    VerificationReport rep =
        verify(cand, complex, family, Rng::mix(seed, 1000 + at),
               samples_per_face, cache);
    out.attempts = static_cast<int>(at) + 1;
    out.candidate = std::move(cand);
    out.report = std::move(rep);
    if (out.report.pass) {
      out.pass = true;
      return out;
    }
  }
  out.inconclusive = true;
  return out;
}

PiecewiseLinear ones_functional(const Fan& fan) {
  PiecewiseLinear g;
  for (std::size_t f = 0; f < fan.facets.size(); ++f) {
    // <sum of dual rows, n_i> = 1 for every ray of the cone
    Expo u(fan.dim, 0);
    for (const Expo& m : fan.facet_dual(f))
      for (int i = 0; i < fan.dim; ++i) u[i] += m[i];
    g.facet_functionals.push_back(std::move(u));
  }
  return g;
}

ConvexSplit convex_split(const ConeComplex& complex, const PiecewiseLinear& f,
                         const PiecewiseLinear& g) {
  if (!complex.fan())
    fail(ErrCode::validation, "convex splitting needs an embedded fan");
  const Fan& fan = *complex.fan();
  std::size_t nf = fan.facets.size();
  int d = fan.dim;

  std::vector<std::int64_t> fval = functional_ray_values(fan, f, "f");
  std::vector<std::int64_t> gval = functional_ray_values(fan, g, "g");

  std::vector<Wall> walls = directed_walls(fan);
  for (const Wall& w : walls)
    if (wall_slack(fan, g, w) <= 0)
      fail(ErrCode::validation,
           "g is not strictly convex across the wall between " +
               complex.facet_face_id(w.s) + " and " +
               complex.facet_face_id(w.t));

  long long ell = 1;
  for (const Wall& w : walls) {
    std::int64_t sf = wall_slack(fan, f, w);
    if (sf < 0)
      ell = std::max<long long>(ell, ceil_div(-sf, wall_slack(fan, g, w)));
  }
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    if (gval[r] < 0)
      fail(ErrCode::domain, "g is negative on ray " + Fan::ray_id(r) +
                                "; no multiple gives valuation data");
    if (fval[r] < 0) {
      if (gval[r] == 0)
        fail(ErrCode::domain, "f is negative on ray " + Fan::ray_id(r) +
                                  " where g vanishes; no shift works");
      ell = std::max<long long>(ell, ceil_div(-fval[r], gval[r]));
    }
  }

  ConvexSplit out;
  out.ell = ell;
  for (std::size_t fc = 0; fc < nf; ++fc) {
    Expo uh(d), us(d);
    for (int i = 0; i < d; ++i) {
      us[i] = ell * g.facet_functionals[fc][i];
      uh[i] = f.facet_functionals[fc][i] + us[i];
    }
    out.shifted.facet_functionals.push_back(std::move(uh));
    out.scaled.facet_functionals.push_back(std::move(us));
  }
  for (const Wall& w : walls)
    if (wall_slack(fan, out.shifted, w) < 0)
      fail(ErrCode::internal, "shifted part is not convex after the split");
  for (std::size_t r = 0; r < fan.rays.size(); ++r)
    if (fval[r] + ell * gval[r] < 0)
      fail(ErrCode::internal, "shifted part is negative on a ray");

  std::map<std::string, std::size_t> ridx;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) ridx[Fan::ray_id(i)] = i;
  auto family_of = [&](const std::vector<std::int64_t>& vals) {
    AntichainFamily fam;
    for (const auto& [id, face] : complex.faces()) {
      std::vector<Expo> els(1);
      for (const auto& rn : face.rays) els[0].push_back(vals[ridx.at(rn)]);
      fam.entries.emplace(id, Antichain(face.rays, els));
    }
    return fam;
  };
  std::vector<std::int64_t> shiftv, scalev;
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    shiftv.push_back(fval[r] + ell * gval[r]);
    scalev.push_back(ell * gval[r]);
  }
  out.shifted_family = family_of(shiftv);
  out.scaled_family = family_of(scalev);
  if (!is_coherent(out.shifted_family, complex).coherent ||
      !is_coherent(out.scaled_family, complex).coherent)
    fail(ErrCode::internal, "split families are not coherent");
  return out;
}

Fan builtin_fan(const std::string& name) {
  Fan f;
  if (name == "p1") {
    f.dim = 1;
    f.rays = {{1}, {-1}};
    f.facets = {{0}, {1}};
  } else if (name == "p2") {
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}};
    f.facets = {{0, 1}, {1, 2}, {0, 2}};
  } else if (name == "p1p1") {
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    f.facets = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  } else if (name == "blp2") {
    f.dim = 2;
    f.rays = {{1, 0}, {0, 1}, {-1, -1}, {1, 1}};
    f.facets = {{0, 3}, {1, 3}, {1, 2}, {0, 2}};
  } else {
    fail(ErrCode::unsupported, "unknown built-in fan '" + name +
                                   "'; available: p1, p2, p1p1, blp2");
  }
  f.validate(FanSupport::complete);
  return f;
}

std::vector<std::string> builtin_fan_names() {
  return {"p1", "p2", "p1p1", "blp2"};
}

}  // namespace valkit
