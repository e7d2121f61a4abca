#include "okb/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <cassert>
#include <map>
#include <set>

#include "okb/errors.hpp"

// Double-description method (Fukuda-Prodon style incremental insertion).
//
// State: a lineality basis plus the extreme rays of the pointed quotient,
// each ray carrying the set of already-inserted inequalities it satisfies
// with equality.  Inserting inequality `a`:
//  - if `a` is nonzero on the lineality space, one lineality direction l0
//    (flipped so a.l0 > 0) leaves the lineality basis and becomes a ray; the
//    remaining basis vectors and all rays are shifted by multiples of l0 to
//    make them tight on `a`.  This is exact: the current cone is W + span(l0)
//    with W tight on `a`, so cutting by a.x >= 0 leaves W + cone(l0).
//  - otherwise rays are split by the sign of a.r; negative rays die, and each
//    *adjacent* positive/negative pair spawns the tight combination
//    s_p * n - s_n * p.  Adjacency is the combinatorial test: no third ray's
//    tight set contains the pair's common tight set.  The test is valid
//    because only extreme rays of the current quotient are ever kept.
//
// Inequalities are primitivized, deduplicated and lex-sorted before
// insertion, so the run (and every canonical form downstream) is a pure
// function of the geometric input.

namespace okb {

namespace {

using Bits = boost::dynamic_bitset<>;

struct WorkRay {
  RatVec v;
  Bits tight;  // over inserted inequality indices
};

struct DD {
  std::vector<RatVec> lin;   // canonical (rref basis) on output
  std::vector<RatVec> rays;  // canonical (primitive, perp to lin, sorted)
};

std::vector<RatVec> canon_vec_list(std::vector<RatVec> vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

DD double_description(int dim, std::vector<RatVec> normals) {
  for (RatVec& n : normals) n = primitive(n);
  std::erase_if(normals, [](const RatVec& n) { return is_zero(n); });
  normals = canon_vec_list(std::move(normals));

  std::vector<RatVec> lin;
  for (int i = 0; i < dim; ++i) {
    RatVec e = zero_vec(dim);
    e[i] = 1;
    lin.push_back(e);
  }
  std::vector<WorkRay> rays;

  for (std::size_t k = 0; k < normals.size(); ++k) {
    const RatVec& a = normals[k];

    int j0 = -1;
    for (std::size_t j = 0; j < lin.size(); ++j) {
      if (dot(a, lin[j]) != 0) {
        j0 = static_cast<int>(j);
        break;
      }
    }

    if (j0 >= 0) {
      RatVec l0 = lin[j0];
      Rat s0 = dot(a, l0);
      if (s0 < 0) {
        for (Rat& x : l0) x = -x;
        s0 = -s0;
      }
      std::vector<RatVec> newlin;
      for (std::size_t j = 0; j < lin.size(); ++j) {
        if (static_cast<int>(j) == j0) continue;
        Rat s = dot(a, lin[j]);
        newlin.push_back(s == 0 ? lin[j] : sub(lin[j], scaled(l0, s / s0)));
      }
      lin = std::move(newlin);
      for (WorkRay& r : rays) {
        Rat s = dot(a, r.v);
        if (s != 0) r.v = primitive(sub(r.v, scaled(l0, s / s0)));
        r.tight.push_back(true);
      }
      WorkRay nr;
      nr.v = primitive(l0);
      nr.tight.resize(k, true);   // was lineality: tight on everything so far
      nr.tight.push_back(false);  // strictly positive on a
      rays.push_back(std::move(nr));
      continue;
    }

    std::vector<Rat> s(rays.size());
    bool any_neg = false;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(a, rays[i].v);
      any_neg = any_neg || s[i] < 0;
    }
    if (!any_neg) {
      for (std::size_t i = 0; i < rays.size(); ++i) rays[i].tight.push_back(s[i] == 0);
      continue;
    }

    // Spawn combinations from adjacent (positive, negative) pairs before
    // touching any tight set.
    std::vector<WorkRay> born;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t n = 0; n < rays.size(); ++n) {
        if (s[n] >= 0) continue;
        Bits common = rays[p].tight & rays[n].tight;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size(); ++r) {
          if (r == p || r == n) continue;
          if (common.is_subset_of(rays[r].tight)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        WorkRay w;
        w.v = primitive(sub(scaled(rays[n].v, s[p]), scaled(rays[p].v, s[n])));
        w.tight = common;
        w.tight.push_back(true);
        born.push_back(std::move(w));
      }
    }

    std::vector<WorkRay> next;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (s[i] < 0) continue;
      rays[i].tight.push_back(s[i] == 0);
      seen.insert(vec_to_string(rays[i].v));
      next.push_back(std::move(rays[i]));
    }
    for (WorkRay& w : born) {
      if (seen.insert(vec_to_string(w.v)).second) next.push_back(std::move(w));
    }
    rays = std::move(next);
  }

  DD out;
  out.lin = rref_basis(lin);
  std::vector<RatVec> rs;
  for (const WorkRay& r : rays) {
    RatVec v = out.lin.empty() ? r.v : primitive(project_off(r.v, out.lin));
    if (!is_zero(v)) rs.push_back(std::move(v));
  }
  out.rays = canon_vec_list(std::move(rs));
  return out;
}

// Full V- (or H-) description out of a DD pair: rays plus both signs of the
// lineality basis.
std::vector<RatVec> flatten(const DD& d) {
  std::vector<RatVec> out = d.rays;
  for (const RatVec& l : d.lin) {
    out.push_back(l);
    out.push_back(scaled(l, Rat(-1)));
  }
  return out;
}

}  // namespace

Cone::Cone(int ambient, std::vector<RatVec> lin, std::vector<RatVec> rays, std::vector<RatVec> eqs,
           std::vector<RatVec> ineqs)
    : ambient_(ambient),
      lin_(std::move(lin)),
      rays_(std::move(rays)),
      eqs_(std::move(eqs)),
      ineqs_(std::move(ineqs)) {}

Cone Cone::from_rays(int ambient, const std::vector<RatVec>& gens) {
  if (ambient < 0) throw InputError("from_rays: negative ambient dimension");
  std::vector<RatVec> g;
  for (const RatVec& v : gens) {
    if (static_cast<int>(v.size()) != ambient)
      throw InputError("from_rays: generator " + vec_to_string(v) + " has wrong dimension");
    if (is_zero(v)) throw InputError("from_rays: zero vector among generators");
    g.push_back(primitive(v));
  }
  g = canon_vec_list(std::move(g));
  DD dual = double_description(ambient, g);              // V-rep of the dual cone
  DD prim = double_description(ambient, flatten(dual));  // minimal V-rep of C itself
  return Cone(ambient, std::move(prim.lin), std::move(prim.rays), std::move(dual.lin),
              std::move(dual.rays));
}

Cone Cone::from_ineqs(int ambient, const std::vector<RatVec>& normals) {
  if (ambient < 0) throw InputError("from_ineqs: negative ambient dimension");
  for (const RatVec& n : normals) {
    if (static_cast<int>(n.size()) != ambient)
      throw InputError("from_ineqs: normal " + vec_to_string(n) + " has wrong dimension");
  }
  DD prim = double_description(ambient, normals);
  DD dual = double_description(ambient, flatten(prim));
  return Cone(ambient, std::move(prim.lin), std::move(prim.rays), std::move(dual.lin),
              std::move(dual.rays));
}

std::vector<RatVec> Cone::generators() const {
  std::vector<RatVec> out = rays_;
  for (const RatVec& l : lin_) {
    out.push_back(l);
    out.push_back(scaled(l, Rat(-1)));
  }
  return out;
}

std::vector<RatVec> Cone::inequalities() const {
  std::vector<RatVec> out = ineqs_;
  for (const RatVec& e : eqs_) {
    out.push_back(e);
    out.push_back(scaled(e, Rat(-1)));
  }
  return out;
}

bool Cone::contains(const RatVec& x) const {
  if (static_cast<int>(x.size()) != ambient_)
    throw InputError("contains: point dimension mismatch");
  for (const RatVec& e : eqs_)
    if (dot(e, x) != 0) return false;
  for (const RatVec& a : ineqs_)
    if (dot(a, x) < 0) return false;
  return true;
}

bool Cone::relint_contains(const RatVec& x) const {
  if (static_cast<int>(x.size()) != ambient_)
    throw InputError("relint_contains: point dimension mismatch");
  for (const RatVec& e : eqs_)
    if (dot(e, x) != 0) return false;
  for (const RatVec& a : ineqs_)
    if (dot(a, x) <= 0) return false;
  return true;
}

RatVec Cone::relint_point() const {
  RatVec p = zero_vec(ambient_);
  for (const RatVec& r : rays_) p = add(p, r);
  return p;
}

bool Cone::operator==(const Cone& o) const {
  return ambient_ == o.ambient_ && lin_ == o.lin_ && rays_ == o.rays_ && eqs_ == o.eqs_ &&
         ineqs_ == o.ineqs_;
}

bool Cone::operator<(const Cone& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  if (rays_.size() != o.rays_.size()) return rays_.size() < o.rays_.size();
  return key() < o.key();
}

std::string Cone::key() const {
  auto list = [](const std::vector<RatVec>& vs) {
    std::string s = "{";
    for (const RatVec& v : vs) s += vec_to_string(v);
    return s + "}";
  };
  return "lin" + list(lin_) + "rays" + list(rays_) + "eqs" + list(eqs_) + "ineqs" + list(ineqs_);
}

std::vector<RatVec> rays_to_ineqs(int ambient, const std::vector<RatVec>& rays) {
  return Cone::from_rays(ambient, rays).inequalities();
}

std::vector<RatVec> ineqs_to_rays(int ambient, const std::vector<RatVec>& normals) {
  return Cone::from_ineqs(ambient, normals).generators();
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("intersect: ambient dimension mismatch");
  std::vector<RatVec> h = a.inequalities();
  std::vector<RatVec> hb = b.inequalities();
  h.insert(h.end(), hb.begin(), hb.end());
  return Cone::from_ineqs(a.ambient_dim(), h);
}

// --- face lattice ----------------------------------------------------------
//
// Faces are enumerated combinatorially.  Every face of a cone is generated by
// the extreme rays lying on it (plus the lineality space), so a face is
// identified by a closed set of tight inequality indices and its geometry is
// rebuilt from the ray subset; no conversion run is needed per candidate.

namespace {

struct FaceKey {
  std::vector<int> active;
  std::vector<int> ray_idx;
};

// Closure of an active set A: the rays tight on all of A, then the maximal
// active set tight on all those rays.  With no rays left, every inequality is
// active (the face is the lineality space).
FaceKey face_closure(const std::vector<Bits>& ray_tights, int n_ineq, const Bits& a) {
  FaceKey out;
  Bits maxa(n_ineq);
  maxa.set();
  for (std::size_t i = 0; i < ray_tights.size(); ++i) {
    if (a.is_subset_of(ray_tights[i])) {
      out.ray_idx.push_back(static_cast<int>(i));
      maxa &= ray_tights[i];
    }
  }
  for (int j = 0; j < n_ineq; ++j)
    if (maxa.test(j)) out.active.push_back(j);
  return out;
}

Cone face_geometry(const Cone& c, const std::vector<int>& ray_idx) {
  std::vector<RatVec> gens;
  for (int i : ray_idx) gens.push_back(c.rays()[i]);
  for (const RatVec& l : c.lineality()) {
    gens.push_back(l);
    gens.push_back(scaled(l, Rat(-1)));
  }
  return Cone::from_rays(c.ambient_dim(), gens);
}

std::vector<Bits> ray_incidence(const Cone& c) {
  int n_ineq = static_cast<int>(c.ineqs().size());
  std::vector<Bits> z;
  for (const RatVec& r : c.rays()) {
    Bits b(n_ineq);
    for (int j = 0; j < n_ineq; ++j)
      if (dot(c.ineqs()[j], r) == 0) b.set(j);
    z.push_back(std::move(b));
  }
  return z;
}

}  // namespace

std::vector<ConeFace> faces(const Cone& c) {
  int n_ineq = static_cast<int>(c.ineqs().size());
  std::vector<Bits> z = ray_incidence(c);

  std::map<std::vector<int>, std::vector<int>> found;  // active -> ray indices
  std::vector<std::vector<int>> queue;

  auto visit = [&](const Bits& a) -> const std::vector<int>* {
    FaceKey fk = face_closure(z, n_ineq, a);
    auto [it, fresh] = found.emplace(fk.active, fk.ray_idx);
    return fresh ? &it->first : nullptr;
  };

  Bits none(n_ineq);
  if (const std::vector<int>* root = visit(none)) queue.push_back(*root);
  while (!queue.empty()) {
    std::vector<int> act = std::move(queue.back());
    queue.pop_back();
    Bits base(n_ineq);
    for (int j : act) base.set(j);
    for (int j = 0; j < n_ineq; ++j) {
      if (base.test(j)) continue;
      Bits child = base;
      child.set(j);
      if (const std::vector<int>* fresh = visit(child)) queue.push_back(*fresh);
    }
  }

  std::vector<ConeFace> out;
  for (const auto& [active, ray_idx] : found)
    out.push_back(ConeFace{active, face_geometry(c, ray_idx)});
  std::sort(out.begin(), out.end(), [](const ConeFace& a, const ConeFace& b) {
    if (a.active.size() != b.active.size()) return a.active.size() < b.active.size();
    return a.active < b.active;
  });
  return out;
}

ConeFace minimal_face(const Cone& c, const RatVec& x) {
  if (!c.contains(x))
    throw ContainmentError("minimal_face: point " + vec_to_string(x) + " is not in the cone");
  int n_ineq = static_cast<int>(c.ineqs().size());
  Bits a(n_ineq);
  for (int j = 0; j < n_ineq; ++j)
    if (dot(c.ineqs()[j], x) == 0) a.set(j);
  FaceKey fk = face_closure(ray_incidence(c), n_ineq, a);
  return ConeFace{fk.active, face_geometry(c, fk.ray_idx)};
}

}  // namespace okb
