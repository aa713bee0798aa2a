#include "udg/symmetry.hpp"

#include <cmath>
#include <stdexcept>

namespace udg {

void SymmetrySpec::validate(int n) const {
  if (dim != 2 && dim != 3) throw std::invalid_argument("symmetry: dim must be 2 or 3");
  if (rotation_order < 1) throw std::invalid_argument("symmetry: rotation order >= 1");
  int group = rotation_order * (mirror ? 2 : 1);
  std::vector<char> seen(n, 0);
  for (const auto& o : orbits) {
    if (o.vertices.empty() || o.vertices[0] != o.rep)
      throw std::invalid_argument("symmetry: orbit must start at its representative");
    if (group % static_cast<int>(o.vertices.size()) != 0)
      throw std::invalid_argument("symmetry: orbit length must divide the group order");
    for (int v : o.vertices) {
      if (v < 0 || v >= n || seen[v]) throw std::invalid_argument("symmetry: orbits must partition the vertex set");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw std::invalid_argument("symmetry: orbits must partition the vertex set");
}

namespace {

// generator = rotation by 2*pi/k (about origin / z-axis), then mirror across x=0 if set
template <class T>
void apply_generator(const SymmetrySpec& spec, const T* in, T* out) {
  T ang = T(2) * pi_value<T>() / T(spec.rotation_order);
  using std::cos;
  using std::sin;
  T c = cos(ang), s = sin(ang);
  T x = in[0] * c - in[1] * s;
  T y = in[0] * s + in[1] * c;
  if (spec.mirror) x = -x;
  out[0] = x;
  out[1] = y;
  if (spec.dim == 3) out[2] = in[2];
}

}  // namespace

template <class T>
Points<T> expand_orbit(const SymmetrySpec& spec,
                       const std::vector<std::pair<int, std::vector<T>>>& rep_points) {
  int n = 0;
  for (const auto& o : spec.orbits) n += static_cast<int>(o.vertices.size());
  spec.validate(n);
  if (rep_points.size() != spec.orbits.size())
    throw std::invalid_argument("expand_orbit: one point per representative required");

  Points<T> pts;
  pts.dim = spec.dim;
  pts.coords.assign(static_cast<size_t>(n) * spec.dim, T(0));
  for (const auto& o : spec.orbits) {
    const std::vector<T>* rep = nullptr;
    for (const auto& [v, p] : rep_points)
      if (v == o.rep) rep = &p;
    if (rep == nullptr || static_cast<int>(rep->size()) != spec.dim)
      throw std::invalid_argument("expand_orbit: representative point missing or wrong dimension");
    std::vector<T> cur = *rep;
    for (size_t i = 0; i < o.vertices.size(); ++i) {
      for (int k = 0; k < spec.dim; ++k) pts.row(o.vertices[i])[k] = cur[k];
      if (i + 1 < o.vertices.size()) {
        std::vector<T> next(spec.dim);
        apply_generator(spec, cur.data(), next.data());
        cur = next;
      }
    }
  }
  return pts;
}

void ChainSpec::validate(int n) const {
  std::vector<char> child(n, 0);
  for (const auto& st : steps) {
    if (st.from < 0 || st.from >= n || st.to < 0 || st.to >= n || st.from == st.to)
      throw std::invalid_argument("chain: bad step endpoints");
    if (child[st.to]) throw std::invalid_argument("chain: vertex placed twice");
    child[st.to] = 1;
  }
  // forest: walking from any child through parents must terminate at a non-child
  for (const auto& st : steps) {
    int v = st.from, guard = 0;
    while (guard++ <= n) {
      bool is_child = false;
      for (const auto& s2 : steps)
        if (s2.to == v) {
          v = s2.from;
          is_child = true;
          break;
        }
      if (!is_child) break;
    }
    if (guard > n) throw std::invalid_argument("chain: cycle in spec");
  }
}

template <class T>
void chain_apply(const ChainSpec& spec, Points<T>& pts, const std::vector<T>& params,
                 const std::vector<bool>& placed_in, std::vector<bool>* placed_out) {
  int per = spec.params_per_step(pts.dim);
  if (static_cast<int>(params.size()) != per * static_cast<int>(spec.steps.size()))
    throw std::invalid_argument("chain: parameter count mismatch");
  std::vector<bool> placed = placed_in;
  size_t pi = 0;
  for (const auto& st : spec.steps) {
    if (!placed[st.from]) throw std::invalid_argument("chain: parent not placed");
    const T* a = pts.row(st.from);
    T* b = pts.row(st.to);
    if (pts.dim == 2) {
      auto [c, s] = half_angle(params[pi++]);
      b[0] = a[0] + c;
      b[1] = a[1] + s;
    } else {
      T u = params[pi++];
      T v = params[pi++];
      auto d = half_angle_sphere(u, v);
      for (int k = 0; k < 3; ++k) b[k] = a[k] + d[k];
    }
    placed[st.to] = true;
  }
  if (placed_out) *placed_out = placed;
}

template Points<double> expand_orbit<double>(const SymmetrySpec&,
                                             const std::vector<std::pair<int, std::vector<double>>>&);
template Points<Dec50> expand_orbit<Dec50>(const SymmetrySpec&,
                                           const std::vector<std::pair<int, std::vector<Dec50>>>&);
template Points<Dec100> expand_orbit<Dec100>(const SymmetrySpec&,
                                             const std::vector<std::pair<int, std::vector<Dec100>>>&);
template void chain_apply<double>(const ChainSpec&, Points<double>&, const std::vector<double>&,
                                  const std::vector<bool>&, std::vector<bool>*);
template void chain_apply<Dec50>(const ChainSpec&, Points<Dec50>&, const std::vector<Dec50>&,
                                 const std::vector<bool>&, std::vector<bool>*);
template void chain_apply<Dec100>(const ChainSpec&, Points<Dec100>&, const std::vector<Dec100>&,
                                  const std::vector<bool>&, std::vector<bool>*);

}  // namespace udg
