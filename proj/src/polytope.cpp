#include "okb/polytope.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>

#include "okb/cone.hpp"
#include "okb/errors.hpp"

namespace okb {

namespace {

// Dehomogenizes the canonical cone C in Q^{1+d} (coordinate 0 is the
// homogenizing one) into polytope data.  Returns false if the slice x0 = 1
// is empty; throws if it is nonempty but unbounded.
struct Dehom {
  std::vector<RatVec> vertices;
  std::vector<PolyIneq> facets;
  std::vector<PolyIneq> eqs;
};

bool dehomogenize(const Cone& c, Dehom& out) {
  std::vector<RatVec> verts;
  RatVec escape;  // a direction witnessing unboundedness, if any
  bool unbounded = !c.lineality().empty();
  if (unbounded && !c.lineality().empty()) escape = c.lineality().front();
  for (const RatVec& r : c.rays()) {
    if (r[0] > 0) {
      RatVec v(r.begin() + 1, r.end());
      for (Rat& x : v) x /= r[0];
      verts.push_back(std::move(v));
    } else {
      // r[0] < 0 cannot satisfy x0 >= 0; r[0] == 0 is a recession direction.
      unbounded = true;
      if (escape.empty()) escape = r;
    }
  }
  if (verts.empty()) return false;  // empty polytope (recession of an empty set is moot)
  if (unbounded)
    throw InputError("polytope is unbounded (direction " + vec_to_string(escape) + ")");
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  out.vertices = std::move(verts);

  for (const RatVec& n : c.ineqs()) {
    RatVec a(n.begin() + 1, n.end());
    if (is_zero(a)) continue;  // the x0 >= 0 facet - vacuous at x0 = 1
    out.facets.push_back(PolyIneq{std::move(a), -n[0]});
  }
  for (const RatVec& e : c.equations()) {
    RatVec a(e.begin() + 1, e.end());
    if (is_zero(a)) continue;  // cannot occur on a nonempty slice
    out.eqs.push_back(PolyIneq{std::move(a), -e[0]});
  }
  return true;
}

}  // namespace

Polytope Polytope::empty(int ambient) {
  Polytope p;
  p.ambient_ = ambient;
  p.facets_.push_back(PolyIneq{zero_vec(ambient), 1});  // 0 >= 1: nothing satisfies it
  return p;
}

Polytope Polytope::from_points(int ambient, const std::vector<RatVec>& pts) {
  if (pts.empty()) return empty(ambient);
  std::vector<RatVec> gens;
  for (const RatVec& p : pts) {
    if (static_cast<int>(p.size()) != ambient)
      throw InputError("from_points: point " + vec_to_string(p) + " has wrong dimension");
    RatVec g;
    g.reserve(ambient + 1);
    g.push_back(1);
    g.insert(g.end(), p.begin(), p.end());
    gens.push_back(std::move(g));
  }
  Cone c = Cone::from_rays(ambient + 1, gens);
  Polytope out;
  out.ambient_ = ambient;
  Dehom d;
  if (!dehomogenize(c, d)) return empty(ambient);  // unreachable for nonempty pts
  out.vertices_ = std::move(d.vertices);
  out.facets_ = std::move(d.facets);
  out.eqs_ = std::move(d.eqs);
  return out;
}

Polytope Polytope::from_ineqs(int ambient, const std::vector<PolyIneq>& ineqs) {
  std::vector<RatVec> normals;
  for (const PolyIneq& q : ineqs) {
    if (static_cast<int>(q.a.size()) != ambient)
      throw InputError("from_ineqs: inequality " + vec_to_string(q.a) + " has wrong dimension");
    RatVec n;
    n.reserve(ambient + 1);
    n.push_back(-q.b);
    n.insert(n.end(), q.a.begin(), q.a.end());
    normals.push_back(std::move(n));
  }
  RatVec x0_pos = zero_vec(ambient + 1);
  x0_pos[0] = 1;
  normals.push_back(std::move(x0_pos));
  Cone c = Cone::from_ineqs(ambient + 1, normals);
  Dehom d;
  if (!dehomogenize(c, d)) return empty(ambient);
  Polytope out;
  out.ambient_ = ambient;
  out.vertices_ = std::move(d.vertices);
  out.facets_ = std::move(d.facets);
  out.eqs_ = std::move(d.eqs);
  return out;
}

std::vector<PolyIneq> Polytope::all_ineqs() const {
  std::vector<PolyIneq> out = facets_;
  for (const PolyIneq& e : eqs_) {
    out.push_back(e);
    out.push_back(PolyIneq{scaled(e.a, Rat(-1)), -e.b});
  }
  return out;
}

int Polytope::dim() const {
  if (vertices_.empty()) return -1;
  std::vector<RatVec> diffs;
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    diffs.push_back(sub(vertices_[i], vertices_[0]));
  return rank_of(diffs);
}

bool Polytope::contains(const RatVec& x) const {
  if (static_cast<int>(x.size()) != ambient_)
    throw InputError("contains: point dimension mismatch");
  if (vertices_.empty()) return false;
  for (const PolyIneq& e : eqs_)
    if (dot(e.a, x) != e.b) return false;
  for (const PolyIneq& f : facets_)
    if (dot(f.a, x) < f.b) return false;
  return true;
}

std::string Polytope::key() const {
  if (vertices_.empty()) return "empty";
  std::string s = "{";
  for (const RatVec& v : vertices_) s += vec_to_string(v);
  return s + "}";
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw InputError("minkowski_sum: ambient dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<RatVec> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const RatVec& a : p.vertices())
    for (const RatVec& b : q.vertices()) sums.push_back(add(a, b));
  return Polytope::from_points(p.ambient_dim(), sums);
}

Polytope scale(const Polytope& p, const Rat& alpha) {
  if (alpha < 0) throw InputError("scale: negative factor " + to_string(alpha));
  if (p.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<RatVec> pts;
  pts.reserve(p.vertices().size());
  for (const RatVec& v : p.vertices()) pts.push_back(scaled(v, alpha));
  return Polytope::from_points(p.ambient_dim(), pts);
}

Polytope translate(const Polytope& p, const RatVec& t) {
  if (static_cast<int>(t.size()) != p.ambient_dim())
    throw InputError("translate: dimension mismatch");
  if (p.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<RatVec> pts;
  for (const RatVec& v : p.vertices()) pts.push_back(add(v, t));
  return Polytope::from_points(p.ambient_dim(), pts);
}

// --- volume -----------------------------------------------------------------

namespace {

// Pulling triangulation: cone every facet not containing the first canonical
// vertex over that vertex, recursing inside each facet.  Emits simplices as
// (dim+1)-tuples of vertices.
void triangulate(const Polytope& p, int d, std::vector<std::vector<RatVec>>& out) {
  const std::vector<RatVec>& vs = p.vertices();
  if (static_cast<int>(vs.size()) == d + 1) {
    out.push_back(vs);
    return;
  }
  const RatVec& apex = vs.front();
  for (const PolyIneq& f : p.facets()) {
    if (dot(f.a, apex) == f.b) continue;
    std::vector<RatVec> fv;
    for (const RatVec& v : vs)
      if (dot(f.a, v) == f.b) fv.push_back(v);
    Polytope facet = Polytope::from_points(p.ambient_dim(), fv);
    std::vector<std::vector<RatVec>> sub;
    triangulate(facet, d - 1, sub);
    for (std::vector<RatVec>& s : sub) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

Rat factorial(int n) {
  Rat f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Rat volume(const Polytope& p) {
  int d = p.ambient_dim();
  if (p.dim() < d) return 0;
  if (d == 0) return 1;  // the point in Q^0 has volume 1 by convention
  std::vector<std::vector<RatVec>> simplices;
  triangulate(p, d, simplices);
  Rat total = 0;
  for (const std::vector<RatVec>& s : simplices) {
    RatMat m(d, d);
    for (int i = 0; i < d; ++i) {
      RatVec e = sub(s[i], s.back());
      for (int j = 0; j < d; ++j) m.at(i, j) = e[j];
    }
    Rat dt = det(m);
    total += dt < 0 ? -dt : dt;
  }
  return total / factorial(d);
}

// --- face lattice ------------------------------------------------------------
//
// Same combinatorial scheme as for cones: a face is the hull of the vertices
// tight on its active facet set, so closure and geometry need only the
// vertex/facet incidence.

namespace {

using Bits = boost::dynamic_bitset<>;

struct VClosure {
  std::vector<int> active;
  std::vector<int> vert_idx;
};

VClosure poly_closure(const std::vector<Bits>& vert_tights, int n_facet, const Bits& a) {
  VClosure out;
  Bits maxa(n_facet);
  maxa.set();
  for (std::size_t i = 0; i < vert_tights.size(); ++i) {
    if (a.is_subset_of(vert_tights[i])) {
      out.vert_idx.push_back(static_cast<int>(i));
      maxa &= vert_tights[i];
    }
  }
  for (int j = 0; j < n_facet; ++j)
    if (maxa.test(j)) out.active.push_back(j);
  return out;
}

std::vector<Bits> vertex_incidence(const Polytope& p) {
  int n_facet = static_cast<int>(p.facets().size());
  std::vector<Bits> z;
  for (const RatVec& v : p.vertices()) {
    Bits b(n_facet);
    for (int j = 0; j < n_facet; ++j)
      if (dot(p.facets()[j].a, v) == p.facets()[j].b) b.set(j);
    z.push_back(std::move(b));
  }
  return z;
}

Polytope hull_of(const Polytope& p, const std::vector<int>& vert_idx) {
  std::vector<RatVec> pts;
  for (int i : vert_idx) pts.push_back(p.vertices()[i]);
  return Polytope::from_points(p.ambient_dim(), pts);
}

}  // namespace

std::vector<PolyFace> faces(const Polytope& p) {
  if (p.is_empty()) return {};
  int n_facet = static_cast<int>(p.facets().size());
  std::vector<Bits> z = vertex_incidence(p);

  std::map<std::vector<int>, std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  auto visit = [&](const Bits& a) -> const std::vector<int>* {
    VClosure c = poly_closure(z, n_facet, a);
    if (c.vert_idx.empty()) return nullptr;  // the empty face - not reported
    auto [it, fresh] = found.emplace(c.active, c.vert_idx);
    return fresh ? &it->first : nullptr;
  };

  Bits none(n_facet);
  if (const std::vector<int>* root = visit(none)) queue.push_back(*root);
  while (!queue.empty()) {
    std::vector<int> act = std::move(queue.back());
    queue.pop_back();
    Bits base(n_facet);
    for (int j : act) base.set(j);
    for (int j = 0; j < n_facet; ++j) {
      if (base.test(j)) continue;
      Bits child = base;
      child.set(j);
      if (const std::vector<int>* fresh = visit(child)) queue.push_back(*fresh);
    }
  }

  std::vector<PolyFace> out;
  for (const auto& [active, vert_idx] : found)
    out.push_back(PolyFace{active, hull_of(p, vert_idx)});
  std::sort(out.begin(), out.end(), [](const PolyFace& a, const PolyFace& b) {
    if (a.active.size() != b.active.size()) return a.active.size() < b.active.size();
    return a.active < b.active;
  });
  return out;
}

PolyFace minimal_face(const Polytope& p, const RatVec& x) {
  if (!p.contains(x))
    throw ContainmentError("minimal_face: point " + vec_to_string(x) + " is not in the polytope");
  int n_facet = static_cast<int>(p.facets().size());
  Bits a(n_facet);
  for (int j = 0; j < n_facet; ++j)
    if (dot(p.facets()[j].a, x) == p.facets()[j].b) a.set(j);
  VClosure c = poly_closure(vertex_incidence(p), n_facet, a);
  return PolyFace{c.active, hull_of(p, c.vert_idx)};
}

}  // namespace okb
