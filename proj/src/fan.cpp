#include "okb/fan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "okb/errors.hpp"

namespace okb {

LinMap LinMap::identity(int n) { return LinMap{RatMat::identity(n)}; }

LinMap LinMap::last_coords(int n, int rho) {
  RatMat m(rho, n + rho);
  for (int i = 0; i < rho; ++i) m.at(i, n + i) = 1;
  return LinMap{std::move(m)};
}

Fan::Fan(int ambient, std::vector<Cone> cones) : ambient_(ambient) {
  for (const Cone& c : cones) {
    if (c.ambient_dim() != ambient) throw InputError("fan: cone has wrong ambient dimension");
  }
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  cones_ = std::move(cones);
}

bool Fan::has_cone(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  return it != cones_.end() && *it == c;
}

Fan face_fan(const Cone& c) {
  std::vector<Cone> out;
  for (ConeFace& f : faces(c)) out.push_back(std::move(f.geometry));
  return Fan(c.ambient_dim(), std::move(out));
}

namespace {

// Generator-in-inequality containment test: cheap (no conversion run).
bool cone_subset(const Cone& a, const Cone& b) {
  for (const RatVec& g : a.generators())
    if (!b.contains(g)) return false;
  return true;
}

// Closure under pairwise intersection (hence under arbitrary finite
// intersections).  Nested pairs are skipped without a conversion run: their
// intersection is the smaller cone, which is already recorded.
std::map<std::string, Cone> intersection_closure(int ambient, std::deque<Cone> work) {
  std::map<std::string, Cone> all;
  std::vector<const Cone*> recorded;
  while (!work.empty()) {
    Cone c = std::move(work.front());
    work.pop_front();
    if (c.ambient_dim() != ambient)
      throw InputError("close_fan: cone has wrong ambient dimension");
    auto [it, fresh] = all.emplace(c.key(), std::move(c));
    if (!fresh) continue;
    const Cone& cur = it->second;
    for (const Cone* d : recorded) {
      if (cone_subset(cur, *d) || cone_subset(*d, cur)) continue;
      Cone x = intersect(cur, *d);
      if (!all.count(x.key())) work.push_back(std::move(x));
    }
    recorded.push_back(&cur);
  }
  return all;
}

std::vector<Cone> map_values(std::map<std::string, Cone>&& m) {
  std::vector<Cone> out;
  out.reserve(m.size());
  for (auto& [key, c] : m) out.push_back(std::move(c));
  return out;
}

// The fold defining minimal_cone, usable on any member list that is closed
// under intersections.
Cone minimal_fold(const std::vector<Cone>& cones, const RatVec& x, bool* found) {
  bool have = false;
  Cone folded;
  for (const Cone& c : cones) {
    if (!c.contains(x)) continue;
    if (!have) {
      folded = c;
      have = true;
    } else if (!cone_subset(folded, c)) {
      folded = intersect(folded, c);
    }
  }
  *found = have;
  return folded;
}

}  // namespace

Fan close_fan(int ambient, const std::vector<Cone>& cones) {
  // Alternate the two closure steps until neither adds a cone.  Every cone
  // generated is an intersection of faces of intersections ... of the
  // inputs; that family is finite, so the fixpoint terminates.  Faces are
  // taken once per cone (intersecting never produces a cone whose faces
  // were already scanned under a different key).
  std::map<std::string, Cone> all =
      intersection_closure(ambient, std::deque<Cone>(cones.begin(), cones.end()));
  std::set<std::string> faced;
  for (;;) {
    std::deque<Cone> added;
    for (const auto& [key, c] : all) {
      if (!faced.insert(key).second) continue;
      for (ConeFace& f : faces(c))
        if (!all.count(f.geometry.key())) added.push_back(std::move(f.geometry));
    }
    if (added.empty()) break;
    for (const auto& [key, c] : all) added.push_back(c);
    all = intersection_closure(ambient, std::move(added));
  }
  return Fan(ambient, map_values(std::move(all)));
}

Fan project_fan(const Fan& f, const LinMap& f_map) {
  if (f_map.domain() != f.ambient_dim()) throw InputError("project_fan: map domain mismatch");
  const int cod = f_map.codomain();

  // Distinct images of the members.
  std::map<std::string, Cone> distinct;
  for (const Cone& c : f.cones()) {
    std::vector<RatVec> gens;
    for (const RatVec& g : c.generators()) {
      RatVec img = f_map(g);
      if (!is_zero(img)) gens.push_back(std::move(img));
    }
    Cone ic = Cone::from_rays(cod, gens);
    distinct.emplace(ic.key(), std::move(ic));
  }
  std::vector<Cone> images = map_values(std::move(distinct));

  // Support of the image family.  The input is face-closed with convex
  // support, so this equals the image of the largest member.
  std::vector<RatVec> all_gens;
  for (const Cone& ic : images)
    for (const RatVec& g : ic.generators()) all_gens.push_back(g);
  Cone hull = Cone::from_rays(cod, all_gens);
  const int d = hull.dim();
  if (d == 0) return Fan(cod, {std::move(hull)});
  std::vector<RatVec> span_basis = rref_basis(hull.generators());

  // Wall functionals.  Boundary points of any image are images of proper
  // faces of its preimage, so they lie in images of dimension <= d-1, and
  // every such image sits inside the span of one of dimension exactly d-1
  // (image dimension climbs by at most one per cover step in the face
  // lattice, reaching d at the top).  Each of those spans is cut out inside
  // span(hull) by any equation with a nonzero component there; restricting
  // the equation to span(hull) makes that choice canonical, so equal walls
  // deduplicate exactly.
  std::set<std::string> wall_seen;
  std::vector<RatVec> walls;
  for (const Cone& ic : images) {
    if (ic.dim() != d - 1) continue;
    for (const RatVec& e : ic.equations()) {
      RatVec e_span = sub(e, project_off(e, span_basis));
      if (is_zero(e_span)) continue;
      RatVec h = primitive_signed(e_span);
      if (wall_seen.insert(vec_to_string(h)).second) walls.push_back(std::move(h));
      break;
    }
  }

  // Slice the support along every wall.  A piece is only recomputed when
  // the wall genuinely separates its generators; the crossing-pair
  // combinations are the standard one-constraint refinement of a generator
  // presentation, valid with or without lineality.
  std::vector<Cone> cells;
  cells.push_back(std::move(hull));
  for (const RatVec& h : walls) {
    std::vector<Cone> next;
    next.reserve(cells.size() + 4);
    for (Cone& c : cells) {
      std::vector<RatVec> gens = c.generators();
      std::vector<Rat> sgn(gens.size());
      bool pos = false, neg = false;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        sgn[i] = dot(h, gens[i]);
        if (sgn[i] > 0) pos = true;
        if (sgn[i] < 0) neg = true;
      }
      if (!pos || !neg) {
        next.push_back(std::move(c));
        continue;
      }
      std::vector<RatVec> plus, minus;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (sgn[i] >= 0) plus.push_back(gens[i]);
        if (sgn[i] <= 0) minus.push_back(gens[i]);
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (sgn[i] <= 0) continue;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          if (sgn[j] >= 0) continue;
          RatVec w = sub(scaled(gens[j], sgn[i]), scaled(gens[i], sgn[j]));
          if (is_zero(w)) continue;
          plus.push_back(w);
          minus.push_back(std::move(w));
        }
      }
      next.push_back(Cone::from_rays(cod, plus));
      next.push_back(Cone::from_rays(cod, minus));
    }
    cells = std::move(next);
  }

  // Group the slices by the set of full-dimensional images containing them.
  // A slice interior never meets a wall, hence never meets an image
  // boundary, so one relative-interior point decides containment for the
  // whole slice.  Each group's union is the common cell of the image family
  // there, and it is convex, so it equals the conic hull of the group.
  std::vector<const Cone*> bigs;
  for (const Cone& ic : images)
    if (ic.dim() == d) bigs.push_back(&ic);
  std::map<std::string, std::vector<const Cone*>> groups;
  for (const Cone& c : cells) {
    RatVec x = c.relint_point();
    std::string sig;
    sig.reserve(bigs.size());
    for (const Cone* b : bigs) sig.push_back(b->contains(x) ? '1' : '0');
    groups[sig].push_back(&c);
  }
  // Comparable signatures would make one group's cell contain another's;
  // a projected face fan never produces that.
  for (auto it = groups.begin(); it != groups.end(); ++it)
    for (auto jt = std::next(it); jt != groups.end(); ++jt) {
      const std::string &a = it->first, &b = jt->first;
      bool a_in_b = true, b_in_a = true;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == '1' && b[k] == '0') a_in_b = false;
        if (b[k] == '1' && a[k] == '0') b_in_a = false;
      }
      if (a_in_b || b_in_a)
        throw Error("project_fan: image family is not a chamber complex");
    }

  // Faces of the grouped cells assemble the fan: the cells tile the support
  // and meet along common faces, so the face-closure is already
  // intersection-closed.
  std::map<std::string, Cone> out;
  for (const auto& [sig, members] : groups) {
    std::vector<RatVec> gens;
    for (const Cone* m : members)
      for (const RatVec& g : m->generators()) gens.push_back(g);
    Cone chamber = Cone::from_rays(cod, gens);
    for (ConeFace& fc : faces(chamber)) {
      std::string k = fc.geometry.key();
      if (!out.count(k)) out.emplace(std::move(k), std::move(fc.geometry));
    }
  }
  return Fan(cod, map_values(std::move(out)));
}

Cone minimal_cone(const Fan& f, const RatVec& x) {
  bool found = false;
  Cone folded = minimal_fold(f.cones(), x, &found);
  if (!found)
    throw ContainmentError("minimal_cone: point " + vec_to_string(x) +
                           " is outside the support of the fan");
  if (!f.has_cone(folded)) throw Error("minimal_cone: fan is not closed under intersections");
  return folded;
}

}  // namespace okb
