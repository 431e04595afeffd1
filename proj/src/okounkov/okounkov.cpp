#include "okounkov/okounkov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "core/rng.hpp"

namespace valkit {

namespace {

using Pt = std::vector<Rat>;

Rat cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

Rat dot2(const Pt& a, const Pt& b) { return a[0] * b[0] + a[1] * b[1]; }

Pt sub2(const Pt& a, const Pt& b) { return {a[0] - b[0], a[1] - b[1]}; }

// squared distance from p to the segment [a, b]
Rat seg_dist2(const Pt& p, const Pt& a, const Pt& b) {
  Pt ab = sub2(b, a), ap = sub2(p, a);
  Rat len2 = dot2(ab, ab);
  if (len2 == 0) return dot2(ap, ap);
  Rat t = dot2(ap, ab) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  Pt q = {p[0] - (a[0] + t * ab[0]), p[1] - (a[1] + t * ab[1])};
  return dot2(q, q);
}

bool body_contains(const ConvexBody& b, const Pt& p) {
  if (b.dim == 1) return b.hull.front()[0] <= p[0] && p[0] <= b.hull.back()[0];
  std::size_t n = b.hull.size();
  if (n == 1) return b.hull[0] == p;
  if (n == 2) {
    if (cross(b.hull[0], b.hull[1], p) != 0) return false;
    Pt ab = sub2(b.hull[1], b.hull[0]);
    Rat t = dot2(sub2(p, b.hull[0]), ab);
    return t >= 0 && t <= dot2(ab, ab);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cross(b.hull[i], b.hull[(i + 1) % n], p) < 0) return false;
  return true;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace

GradedSections GradedSections::from_polytope(int dim,
                                             std::vector<Expo> points) {
  if (dim < 1) fail(ErrCode::dimension, "section dimension must be positive");
  if (dim > 2)
    fail(ErrCode::unsupported,
         "polytope sections need hull arithmetic, implemented up to "
         "dimension 2; give explicit graded sets instead");
  if (points.empty())
    fail(ErrCode::validation, "a polytope needs at least one lattice point");
  for (const Expo& p : points)
    if (static_cast<int>(p.size()) != dim)
      fail(ErrCode::dimension, "polytope point of the wrong arity");
  GradedSections s;
  s.dim = dim;
  s.polytope = std::move(points);
  return s;
}

GradedSections GradedSections::from_graded(
    int dim, std::map<long long, std::vector<Expo>> h) {
  if (dim < 1) fail(ErrCode::dimension, "section dimension must be positive");
  if (h.empty()) fail(ErrCode::validation, "no graded levels given");
  for (const auto& [n, set] : h) {
    if (n < 1) fail(ErrCode::validation, "graded levels start at degree 1");
    if (set.empty())
      fail(ErrCode::validation,
           "level " + std::to_string(n) + " has no sections");
    for (const Expo& e : set)
      if (static_cast<int>(e.size()) != dim)
        fail(ErrCode::dimension, "section exponent of the wrong arity");
  }
  GradedSections s;
  s.dim = dim;
  s.graded = std::move(h);
  return s;
}

std::vector<Expo> GradedSections::level(long long n) const {
  if (n < 1) fail(ErrCode::validation, "degrees start at 1");
  if (polytope.empty()) {
    auto it = graded.find(n);
    if (it == graded.end())
      fail(ErrCode::validation, "no sections in degree " + std::to_string(n));
    return it->second;
  }
  if (dim == 1) {
    std::int64_t lo = polytope[0][0], hi = lo;
    for (const Expo& p : polytope) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    std::vector<Expo> out;
    for (std::int64_t v = n * lo; v <= n * hi; ++v) out.push_back({v});
    return out;
  }
  // scale the generators, then walk the bounding box against the exact hull
  std::vector<Pt> scaled;
  std::int64_t lo0 = n * polytope[0][0], hi0 = lo0;
  std::int64_t lo1 = n * polytope[0][1], hi1 = lo1;
  for (const Expo& p : polytope) {
    std::int64_t x = n * p[0], y = n * p[1];
    lo0 = std::min(lo0, x), hi0 = std::max(hi0, x);
    lo1 = std::min(lo1, y), hi1 = std::max(hi1, y);
    scaled.push_back({Rat(x), Rat(y)});
  }
  ConvexBody hull = make_body(2, scaled);
  std::vector<Expo> out;
  for (std::int64_t x = lo0; x <= hi0; ++x)
    for (std::int64_t y = lo1; y <= hi1; ++y)
      if (body_contains(hull, {Rat(x), Rat(y)})) out.push_back({x, y});
  return out;
}

ConvexBody make_body(int dim, std::vector<std::vector<Rat>> points) {
  if (dim < 1) fail(ErrCode::dimension, "body dimension must be positive");
  if (dim > 2)
    fail(ErrCode::unsupported, "convex hulls implemented up to dimension 2");
  if (points.empty())
    fail(ErrCode::validation, "a body needs at least one point");
  for (const Pt& p : points)
    if (static_cast<int>(p.size()) != dim)
      fail(ErrCode::dimension, "body point of the wrong arity");

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  ConvexBody b;
  b.dim = dim;
  b.points = points;
  if (dim == 1) {
    b.hull.push_back(points.front());
    if (points.size() > 1) b.hull.push_back(points.back());
    b.full_dim = b.hull.size() == 2;
    return b;
  }
  if (points.size() <= 2) {
    b.hull = points;
    b.full_dim = false;
    return b;
  }
  // monotone chain; collinear points dropped, result counterclockwise from
  // the lexicographically least vertex
  std::vector<Pt> h(2 * points.size());
  std::size_t k = 0;
  for (const Pt& p : points) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  std::size_t lower = k + 1;
  for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
    while (k >= lower && cross(h[k - 2], h[k - 1], *it) <= 0) --k;
    h[k++] = *it;
  }
  h.resize(k - 1);
  b.hull = std::move(h);
  b.full_dim = b.hull.size() >= 3;
  return b;
}

bool same_hull(const ConvexBody& a, const ConvexBody& b) {
  return a.dim == b.dim && a.hull == b.hull;
}

Rat squared_dist_point_body(const std::vector<Rat>& p, const ConvexBody& b) {
  if (static_cast<int>(p.size()) != b.dim)
    fail(ErrCode::dimension, "point and body dimensions differ");
  if (b.dim == 1) {
    if (p[0] < b.hull.front()[0]) {
      Rat d = b.hull.front()[0] - p[0];
      return d * d;
    }
    if (p[0] > b.hull.back()[0]) {
      Rat d = p[0] - b.hull.back()[0];
      return d * d;
    }
    return Rat(0);
  }
  if (body_contains(b, p)) return Rat(0);
  std::size_t n = b.hull.size();
  if (n == 1) {
    Pt d = sub2(p, b.hull[0]);
    return dot2(d, d);
  }
  Rat best = seg_dist2(p, b.hull[0], b.hull[1 % n]);
  for (std::size_t i = 1; i < n; ++i)
    best = std::min(best, seg_dist2(p, b.hull[i], b.hull[(i + 1) % n]));
  return best;
}

Rat squared_hausdorff(const ConvexBody& a, const ConvexBody& b) {
  if (a.dim != b.dim) fail(ErrCode::dimension, "body dimensions differ");
  Rat worst(0);
  for (const Pt& v : a.hull) worst = std::max(worst, squared_dist_point_body(v, b));
  for (const Pt& v : b.hull) worst = std::max(worst, squared_dist_point_body(v, a));
  return worst;
}

DistanceBracket sqrt_bracket(const Rat& sq, const Rat& width) {
  if (sq < 0) fail(ErrCode::domain, "no real square root of a negative");
  if (width <= 0) fail(ErrCode::validation, "bracket width must be positive");
  DistanceBracket d;
  d.sq = sq;
  if (sq == 0) return d;  // lo = hi = 0 exactly
  Rat lo(0), hi = sq < 1 ? Rat(1) : sq;
  while (hi - lo > width) {
    Rat mid = (lo + hi) / 2;
    (mid * mid <= sq ? lo : hi) = mid;
  }
  d.lo = lo;
  d.hi = hi;
  return d;
}

DistanceBracket hausdorff_distance(const ConvexBody& a, const ConvexBody& b,
                                   const Rat& width) {
  return sqrt_bracket(squared_hausdorff(a, b), width);
}

ConvexBody okounkov_sample(const WeightMatrix& w,
                           const GradedSections& sections, long long n_max) {
  if (n_max < 1) fail(ErrCode::validation, "n_max must be at least 1");
  std::size_t d = static_cast<std::size_t>(sections.dim);
  if (w.cols.size() != d)
    fail(ErrCode::dimension,
         "need one weight column per section coordinate");
  for (const LexTuple& c : w.cols)
    if (c.rank() != d)
      fail(ErrCode::dimension,
           "weight rank must equal the section dimension so the body is "
           "full rank");
  std::vector<Pt> pts;
  for (long long n = 1; n <= n_max; ++n) {
    for (const Expo& m : sections.level(n)) {
      LexTuple v = LexTuple::zero(d);
      for (std::size_t i = 0; i < d; ++i) v += Rat(m[i]) * w.cols[i];
      Pt p;
      p.reserve(d);
      for (const Rat& c : v.v) p.push_back(c / n);
      pts.push_back(std::move(p));
    }
  }
  return make_body(sections.dim, std::move(pts));
}

ConvexBody okounkov_sample(const TangentPoint& p, const ConeComplex& c,
                           const GradedSections& sections, long long n_max) {
  return okounkov_sample(duality_to_weights(p, c), sections, n_max);
}

WeakDistanceReport weak_distance(const ConvexBody& a, const ConvexBody& b,
                                 const std::vector<Bump>& bumps,
                                 long long samples, std::uint64_t seed) {
  if (a.dim != b.dim) fail(ErrCode::dimension, "body dimensions differ");
  int d = a.dim;
  if (samples < 1) fail(ErrCode::validation, "need at least one sample");
  for (const Bump& f : bumps) {
    if (static_cast<int>(f.center.size()) != d)
      fail(ErrCode::dimension, "bump center of the wrong arity");
    if (f.radius <= 0) fail(ErrCode::validation, "bump radius must be positive");
  }

  std::vector<double> lo(d), hi(d);
  for (int i = 0; i < d; ++i) {
    Rat l = a.hull.front()[i], h = l;
    for (const auto& body : {&a, &b})
      for (const Pt& v : body->hull) {
        l = std::min(l, v[i]);
        h = std::max(h, v[i]);
      }
    if (l == h)
      fail(ErrCode::domain,
           "degenerate bounding box: both bodies are flat in a coordinate");
    lo[i] = to_double(l);
    hi[i] = to_double(h);
  }
  double vol = 1;
  for (int i = 0; i < d; ++i) vol *= hi[i] - lo[i];

  // hulls and bumps in doubles once; membership by the same edge tests
  auto poly = [d](const ConvexBody& body) {
    std::vector<std::vector<double>> out;
    for (const Pt& v : body.hull) {
      std::vector<double> p(d);
      for (int i = 0; i < d; ++i) p[i] = to_double(v[i]);
      out.push_back(std::move(p));
    }
    return out;
  };
  std::vector<std::vector<double>> pa = poly(a), pb = poly(b);
  auto contains = [d](const std::vector<std::vector<double>>& h,
                      const std::vector<double>& p) {
    if (d == 1) return h.front()[0] <= p[0] && p[0] <= h.back()[0];
    std::size_t n = h.size();
    if (n < 3) return false;  // flat bodies carry no area
    for (std::size_t i = 0; i < n; ++i) {
      const auto &u = h[i], &v = h[(i + 1) % n];
      if ((v[0] - u[0]) * (p[1] - u[1]) - (v[1] - u[1]) * (p[0] - u[0]) < 0)
        return false;
    }
    return true;
  };

  struct BumpD {
    std::vector<double> c;
    double r;
  };
  std::vector<BumpD> fs;
  for (const Bump& f : bumps) {
    BumpD g;
    for (const Rat& x : f.center) g.c.push_back(to_double(x));
    g.r = to_double(f.radius);
    fs.push_back(std::move(g));
  }

  Rng rng(seed);
  std::vector<double> sum(fs.size(), 0), sumsq(fs.size(), 0);
  std::vector<double> x(d);
  for (long long s = 0; s < samples; ++s) {
    for (int i = 0; i < d; ++i)
      x[i] = lo[i] + rng.unit_double() * (hi[i] - lo[i]);
    int ind = (contains(pa, x) ? 1 : 0) - (contains(pb, x) ? 1 : 0);
    for (std::size_t j = 0; j < fs.size(); ++j) {
      double val = 0;
      if (ind != 0) {
        double r2 = 0;
        for (int i = 0; i < d; ++i) {
          double t = (x[i] - fs[j].c[i]) / fs[j].r;
          r2 += t * t;
        }
        if (r2 < 1) val = ind * std::exp(1 - 1 / (1 - r2));
      }
      sum[j] += val;
      sumsq[j] += val * val;
    }
  }

  WeakDistanceReport rep;
  rep.seed = seed;
  rep.samples = samples;
  double n = static_cast<double>(samples);
  for (std::size_t j = 0; j < fs.size(); ++j) {
    BumpStat st;
    double mean = sum[j] / n;
    st.estimate = vol * std::fabs(mean);
    st.std_error = vol * std::sqrt(std::max(0.0, sumsq[j] / n - mean * mean) / n);
    rep.stats.push_back(st);
  }
  return rep;
}

VariationTable variation_experiment(const std::vector<TangentPoint>& path,
                                    const ConeComplex& c,
                                    const GradedSections& sections,
                                    long long n_max, const Rat& width) {
  if (path.empty()) fail(ErrCode::validation, "empty path");
  for (const TangentPoint& p : path) {
    p.validate(c);
    if (p.order() != path.front().order())
      fail(ErrCode::dimension, "mixed ranks along the path");
  }
  std::vector<ConvexBody> bodies;
  for (const TangentPoint& p : path)
    bodies.push_back(okounkov_sample(p, c, sections, n_max));

  VariationTable table;
  for (std::size_t i = 0; i < bodies.size(); ++i) {
    VariationRow row;
    row.step = i;
    row.to_prev = i == 0 ? sqrt_bracket(Rat(0), width)
                         : hausdorff_distance(bodies[i], bodies[i - 1], width);
    row.to_limit = hausdorff_distance(bodies[i], bodies.back(), width);
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string render_svg(const ConvexBody& body) {
  if (body.dim != 2)
    fail(ErrCode::unsupported, "figures are rendered for planar bodies only");
  double lox = 0, hix = 0, loy = 0, hiy = 0;
  for (const Pt& v : body.hull) {
    lox = std::min(lox, to_double(v[0]));
    hix = std::max(hix, to_double(v[0]));
    loy = std::min(loy, to_double(v[1]));
    hiy = std::max(hiy, to_double(v[1]));
  }
  double spanx = std::max(hix - lox, 1e-9), spany = std::max(hiy - loy, 1e-9);
  double margin = 0.1 * std::max(spanx, spany);
  lox -= margin, hix += margin, loy -= margin, hiy += margin;

  const double W = 480, H = 480;
  auto px = [&](double x) { return (x - lox) / (hix - lox) * W; };
  auto py = [&](double y) { return H - (y - loy) / (hiy - loy) * H; };
  char buf[160];
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" "
         "height=\"480\" viewBox=\"0 0 480 480\">\n";
  std::snprintf(buf, sizeof buf,
                "  <line x1=\"%.2f\" y1=\"0\" x2=\"%.2f\" y2=\"480\" "
                "stroke=\"#999\" stroke-width=\"1\"/>\n",
                px(0), px(0));
  svg << buf;
  std::snprintf(buf, sizeof buf,
                "  <line x1=\"0\" y1=\"%.2f\" x2=\"480\" y2=\"%.2f\" "
                "stroke=\"#999\" stroke-width=\"1\"/>\n",
                py(0), py(0));
  svg << buf;
  if (body.hull.size() == 1) {
    std::snprintf(buf, sizeof buf,
                  "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" "
                  "fill=\"#1f77b4\"/>\n",
                  px(to_double(body.hull[0][0])), py(to_double(body.hull[0][1])));
    svg << buf;
  } else {
    svg << "  <polygon points=\"";
    for (std::size_t i = 0; i < body.hull.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", i ? " " : "",
                    px(to_double(body.hull[i][0])),
                    py(to_double(body.hull[i][1])));
      svg << buf;
    }
    svg << "\" fill=\"#1f77b450\" stroke=\"#1f77b4\" stroke-width=\"2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace valkit
