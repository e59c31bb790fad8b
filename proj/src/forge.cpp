#include "semisym/forge.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unistd.h>
#include <unordered_map>

#include "semisym/algorithms.hpp"

namespace semisym {

GeneratedGroup make_standard(StandardKind kind, std::size_t n) {
  if (n == 0) throw std::invalid_argument("standard groups need n >= 1");
  auto cycle = [&](Point from, Point to) {
    std::vector<Point> c(to - from + 1);
    std::iota(c.begin(), c.end(), from);
    return Permutation::from_cycles(n, {c});
  };
  std::vector<Permutation> gens;
  std::string name;
  switch (kind) {
    case StandardKind::Symmetric:
      name = "Sym(" + std::to_string(n) + ")";
      if (n >= 2) gens = {Permutation::from_cycles(n, {{0, 1}}), cycle(0, static_cast<Point>(n - 1))};
      break;
    case StandardKind::Alternating:
      name = "Alt(" + std::to_string(n) + ")";
      if (n >= 3) {
        gens.push_back(Permutation::from_cycles(n, {{0, 1, 2}}));
        gens.push_back(n % 2 ? cycle(0, static_cast<Point>(n - 1)) : cycle(1, static_cast<Point>(n - 1)));
      }
      break;
    case StandardKind::Cyclic:
      name = "Z" + std::to_string(n);
      if (n >= 2) gens.push_back(cycle(0, static_cast<Point>(n - 1)));
      break;
    case StandardKind::Dihedral: {
      name = "Dih(" + std::to_string(2 * n) + ")";
      if (n == 1) return [] { auto g = make_standard(StandardKind::Cyclic, 2); g.set_name("Dih(2)"); return g; }();
      if (n == 2) {
        // Klein four-group in its regular action.
        GeneratedGroup g(4, {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})});
        g.set_name(name);
        return g;
      }
      gens.push_back(cycle(0, static_cast<Point>(n - 1)));
      std::vector<Point> refl(n);
      for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
      gens.push_back(Permutation(std::move(refl)));
      break;
    }
  }
  GeneratedGroup g(n, std::move(gens));
  g.set_name(name);
  return g;
}

namespace {

struct ProjectiveSpace {
  const GaloisField* f;
  std::size_t d;
  std::vector<std::vector<FieldElement>> points;
  std::unordered_map<std::uint64_t, Point> index;

  std::uint64_t code(const std::vector<FieldElement>& v) const {
    std::uint64_t c = 0;
    for (auto x : v) c = c * f->size() + x.code;
    return c;
  }
  std::vector<FieldElement> normalize(std::vector<FieldElement> v) const {
    std::size_t i = 0;
    while (i < d && v[i].code == 0) ++i;
    if (i == d) throw std::logic_error("zero vector has no projective point");
    FieldElement s = f->inv(v[i]);
    for (auto& x : v) x = f->mul(x, s);
    return v;
  }
  Point lookup(const std::vector<FieldElement>& v) const {
    auto it = index.find(code(normalize(v)));
    if (it == index.end()) throw std::invalid_argument("matrix does not preserve the point set");
    return it->second;
  }
  template <class Map>
  Permutation induced(Map&& m) const {
    std::vector<Point> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) img[i] = lookup(m(points[i]));
    return Permutation(std::move(img));
  }
};

std::vector<FieldElement> row_times(const GaloisField& f, std::size_t d, const std::vector<FieldElement>& v,
                                    const Matrix& m) {
  std::vector<FieldElement> w(d, f.zero());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) w[j] = f.add(w[j], f.mul(v[i], m[i * d + j]));
  }
  return w;
}

FieldElement hermitian_value(const GaloisField& f, std::size_t d, const Matrix& j, const std::vector<FieldElement>& v,
                             std::uint32_t bar) {
  FieldElement s = f.zero();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      s = f.add(s, f.mul(f.mul(v[a], j[a * d + b]), f.frobenius(v[b], bar)));
    }
  }
  return s;
}

ProjectiveSpace make_space(const GaloisField& f, std::size_t d, const MatrixGroupSpec* herm) {
  ProjectiveSpace ps{&f, d, {}, {}};
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= f.size();
  for (std::uint64_t c = 1; c < total; ++c) {
    std::vector<FieldElement> v(d);
    std::uint64_t t = c;
    for (std::size_t i = d; i-- > 0;) {
      v[i] = {static_cast<std::uint32_t>(t % f.size())};
      t /= f.size();
    }
    std::size_t lead = 0;
    while (v[lead].code == 0) ++lead;
    if (v[lead].code != 1) continue;
    if (herm && hermitian_value(f, d, herm->form_matrix, v, f.degree() / 2).code != 0) continue;
    ps.index.emplace(ps.code(v), static_cast<Point>(ps.points.size()));
    ps.points.push_back(std::move(v));
  }
  return ps;
}

std::vector<Permutation> induced_generators(const GaloisField& f, const ProjectiveSpace& ps, const MatrixGroupSpec& spec) {
  const std::size_t d = spec.dimension;
  std::vector<Permutation> gens;
  for (const auto& m : spec.generators) {
    gens.push_back(ps.induced([&](const std::vector<FieldElement>& v) { return row_times(f, d, v, m); }));
  }
  for (auto j : spec.field_automorphisms) {
    gens.push_back(ps.induced([&](std::vector<FieldElement> v) {
      for (auto& x : v) x = f.frobenius(x, j);
      return v;
    }));
  }
  return gens;
}

void validate_spec(const GaloisField& f, const MatrixGroupSpec& spec) {
  const std::size_t d = spec.dimension;
  if (d < 2) throw std::invalid_argument("projective action needs dimension >= 2");
  for (const auto& m : spec.generators) {
    if (m.size() != d * d) throw std::invalid_argument("generator matrix has the wrong size");
    if (mat_det(f, d, m).code == 0) throw std::invalid_argument("singular generator matrix");
  }
  if (spec.form == FormKind::Hermitian) {
    if (f.degree() % 2 != 0) throw std::invalid_argument("Hermitian form needs a field of square order");
    const auto bar = f.degree() / 2;
    const auto& j = spec.form_matrix;
    if (j.size() != d * d) throw std::invalid_argument("form matrix has the wrong size");
    if (mat_transpose(d, mat_frobenius(f, j, bar)) != j) throw std::invalid_argument("form is not Hermitian");
    if (mat_det(f, d, j).code == 0) throw std::invalid_argument("degenerate form");
    for (const auto& m : spec.generators) {
      Matrix img = mat_mul(f, d, mat_mul(f, d, m, j), mat_transpose(d, mat_frobenius(f, m, bar)));
      if (img != j) throw std::invalid_argument("generator does not preserve the form");
    }
  }
}

Matrix diag(std::initializer_list<FieldElement> xs) {
  const std::size_t d = xs.size();
  Matrix m(d * d);
  std::size_t i = 0;
  for (auto x : xs) {
    m[i * d + i] = x;
    ++i;
  }
  return m;
}

MatrixGroupSpec sl2_spec(const GaloisField& f) {
  MatrixGroupSpec s;
  s.dimension = 2;
  s.p = f.characteristic();
  s.k = f.degree();
  const auto one = f.one(), zero = f.zero(), w = f.primitive_element();
  s.generators.push_back({one, one, zero, one});
  s.generators.push_back({zero, one, f.neg(one), zero});
  s.generators.push_back(diag({w, f.inv(w)}));
  return s;
}

GeneratedGroup named(GeneratedGroup g, const std::string& name) {
  g.set_name(name);
  return g;
}

}  // namespace

GeneratedGroup projective_action(const MatrixGroupSpec& spec) {
  GaloisField f(spec.p, spec.k);
  validate_spec(f, spec);
  auto ps = make_space(f, spec.dimension, spec.form == FormKind::Hermitian ? &spec : nullptr);
  if (ps.points.empty()) throw std::invalid_argument("form has no isotropic points");
  return GeneratedGroup(ps.points.size(), induced_generators(f, ps, spec));
}

GeneratedGroup psl2(std::uint32_t q) {
  auto f = GaloisField::of_order(q);
  return named(projective_action(sl2_spec(f)), "PSL2(" + std::to_string(q) + ")");
}

GeneratedGroup pgl2(std::uint32_t q) {
  auto f = GaloisField::of_order(q);
  auto s = sl2_spec(f);
  s.generators.push_back(diag({f.primitive_element(), f.one()}));
  return named(projective_action(s), "PGL2(" + std::to_string(q) + ")");
}

GeneratedGroup psigmal2(std::uint32_t q) {
  auto f = GaloisField::of_order(q);
  auto s = sl2_spec(f);
  if (f.degree() > 1) s.field_automorphisms.push_back(1);
  return named(projective_action(s), "PSigmaL2(" + std::to_string(q) + ")");
}

GeneratedGroup pgammal2(std::uint32_t q) {
  auto f = GaloisField::of_order(q);
  auto s = sl2_spec(f);
  s.generators.push_back(diag({f.primitive_element(), f.one()}));
  if (f.degree() > 1) s.field_automorphisms.push_back(1);
  return named(projective_action(s), "PGammaL2(" + std::to_string(q) + ")");
}

namespace {

std::vector<Matrix> sl3_generators(const GaloisField& f) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      Matrix m = mat_identity(3);
      m[i * 3 + j] = f.one();
      gens.push_back(m);
    }
  }
  const auto w = f.primitive_element();
  gens.push_back(diag({w, f.inv(w), f.one()}));
  return gens;
}

MatrixGroupSpec su3_spec(std::uint32_t p) {
  GaloisField f(p, 2);
  MatrixGroupSpec s;
  s.dimension = 3;
  s.p = p;
  s.k = 2;
  s.form = FormKind::Hermitian;
  const auto o = f.one(), z = f.zero();
  s.form_matrix = {z, z, o, z, o, z, o, z, z};
  // Unitary upper unitriangular matrices, then -J to reach the opposite unipotent group.
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (std::uint32_t b = 0; b < f.size(); ++b) {
      for (std::uint32_t c = 0; c < f.size(); ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        Matrix m = {o, {a}, {b}, z, o, {c}, z, z, o};
        Matrix img = mat_mul(f, 3, mat_mul(f, 3, m, s.form_matrix), mat_transpose(3, mat_frobenius(f, m, 1)));
        if (img == s.form_matrix) s.generators.push_back(m);
      }
    }
  }
  const auto m1 = f.neg(o);
  s.generators.push_back({z, z, m1, z, m1, z, m1, z, z});
  return s;
}

GeneratedGroup reduced(const GeneratedGroup& g, const std::string& name) {
  // Keep only generators that enlarge the group, in their given order.
  auto r = group_from_elements(g.degree(), g.generators());
  r.set_name(name);
  return r;
}

}  // namespace

GeneratedGroup psl3(std::uint32_t p) {
  auto f = GaloisField::of_order(p);
  MatrixGroupSpec s;
  s.dimension = 3;
  s.p = f.characteristic();
  s.k = f.degree();
  s.generators = sl3_generators(f);
  return reduced(projective_action(s), "PSL3(" + std::to_string(p) + ")");
}

GeneratedGroup psl3_graph_extension(std::uint32_t p) {
  auto f = GaloisField::of_order(p);
  auto ps = make_space(f, 3, nullptr);
  const std::size_t n = ps.points.size();
  std::vector<Permutation> gens;
  for (const auto& m : sl3_generators(f)) {
    Matrix dual = mat_transpose(3, mat_inverse(f, 3, m));
    std::vector<Point> img(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = ps.lookup(row_times(f, 3, ps.points[i], m));
      img[n + i] = static_cast<Point>(n + ps.lookup(row_times(f, 3, ps.points[i], dual)));
    }
    gens.emplace_back(std::move(img));
  }
  std::vector<Point> swap(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    swap[i] = static_cast<Point>(n + i);
    swap[n + i] = static_cast<Point>(i);
  }
  gens.emplace_back(std::move(swap));
  return reduced(GeneratedGroup(2 * n, std::move(gens)), "PSL3(" + std::to_string(p) + ").2");
}

GeneratedGroup psu3(std::uint32_t p) {
  return reduced(projective_action(su3_spec(p)), "PSU3(" + std::to_string(p) + ")");
}

GeneratedGroup psu3_field_extension(std::uint32_t p) {
  auto s = su3_spec(p);
  s.field_automorphisms.push_back(1);
  return reduced(projective_action(s), "PSU3(" + std::to_string(p) + ").2");
}

GeneratedGroup wreath_product(const GeneratedGroup& base, const GeneratedGroup& top) {
  const std::size_t d = base.degree(), m = top.degree();
  const std::size_t n = d * m;
  std::vector<Permutation> gens;
  for (const auto& orb : orbits(top)) {
    const std::size_t b = orb.front();
    for (const auto& s : base.generators()) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      for (std::size_t i = 0; i < d; ++i) img[b * d + i] = static_cast<Point>(b * d + s[i]);
      gens.emplace_back(std::move(img));
    }
  }
  for (const auto& t : top.generators()) {
    std::vector<Point> img(n);
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < d; ++i) img[b * d + i] = static_cast<Point>(t[b] * d + i);
    }
    gens.emplace_back(std::move(img));
  }
  GeneratedGroup g(n, std::move(gens));
  g.set_name(base.name() + " wr " + top.name());
  return g;
}

GeneratedGroup affine_group(std::uint32_t p, std::size_t n, const std::vector<std::vector<std::int64_t>>& linear) {
  GaloisField f(p, 1);
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= p;
  auto decode = [&](std::size_t c) {
    std::vector<std::uint32_t> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::uint32_t>& v) {
    std::size_t c = 0;
    for (std::size_t i = n; i-- > 0;) c = c * p + v[i];
    return static_cast<Point>(c);
  };
  std::vector<Permutation> gens;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Point> img(size);
    for (std::size_t c = 0; c < size; ++c) {
      auto v = decode(c);
      v[k] = (v[k] + 1) % p;
      img[c] = encode(v);
    }
    gens.emplace_back(std::move(img));
  }
  for (const auto& flat : linear) {
    if (flat.size() != n * n) throw std::invalid_argument("linear part has the wrong size");
    Matrix m(n * n);
    for (std::size_t i = 0; i < n * n; ++i) m[i] = f.from_int(flat[i]);
    if (mat_det(f, n, m).code == 0) throw std::invalid_argument("singular matrix in linear part");
    std::vector<Point> img(size);
    for (std::size_t c = 0; c < size; ++c) {
      auto v = decode(c);
      std::vector<std::uint32_t> w(n, 0);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) w[j] = (w[j] + v[i] * m[i * n + j].code) % p;
      }
      img[c] = encode(w);
    }
    gens.emplace_back(std::move(img));
  }
  GeneratedGroup g(size, std::move(gens));
  g.set_name("AGL-subgroup(" + std::to_string(p) + "^" + std::to_string(n) + ")");
  return g;
}

GeneratedGroup direct_product(const GeneratedGroup& a, const GeneratedGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& s : a.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < a.degree(); ++i) img[i] = s[i];
    gens.emplace_back(std::move(img));
  }
  for (const auto& s : b.generators()) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), Point{0});
    for (std::size_t i = 0; i < b.degree(); ++i) img[a.degree() + i] = static_cast<Point>(a.degree() + s[i]);
    gens.emplace_back(std::move(img));
  }
  GeneratedGroup g(n, std::move(gens));
  g.set_name(a.name() + " x " + b.name());
  return g;
}

// ---- literature groups ----

namespace {

GeneratedGroup build_m12() {
  // 1-based cycles (1..11), (3,7,11,8)(4,10,5,6), (1,12)(2,11)(3,6)(4,8)(5,9)(7,10), shifted to 0-based.
  std::vector<Permutation> gens{
      Permutation::from_cycles(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}),
      Permutation::from_cycles(12, {{2, 6, 10, 7}, {3, 9, 4, 5}}),
      Permutation::from_cycles(12, {{0, 11}, {1, 10}, {2, 5}, {3, 7}, {4, 8}, {6, 9}}),
  };
  GeneratedGroup g(12, std::move(gens), 0, {0, 1, 2, 3, 4});
  bool ok = g.order() == 95040;
  for (std::size_t i = 0; ok && i < 5; ++i) ok = g.level(i).orbit.size() == 12 - i;
  if (!ok) throw std::logic_error("M12 generator self-check failed");
  g.set_name("M12");
  return g;
}

std::uint64_t word_order(const std::vector<Permutation>& gens, const std::vector<int>& word) {
  Permutation x(gens[0].degree());
  for (int w : word) x = x * gens[static_cast<std::size_t>(w)];
  return x.order();
}

// Permutation of 24 points acting as a on 0..11 and b on 12..23.
Permutation pair_perm(const Permutation& a, const Permutation& b) {
  std::vector<Point> img(24);
  for (Point i = 0; i < 12; ++i) {
    img[i] = a[i];
    img[12 + i] = 12 + b[i];
  }
  return Permutation::unchecked(std::move(img));
}

GeneratedGroup build_aut_m12() {
  const GeneratedGroup m12 = build_m12();
  const auto& g = m12.generators();
  // Words used to screen candidate images of the generators before any chain is built.
  const std::vector<std::vector<int>> words{{0, 1},       {0, 0, 1},    {0, 1, 1},       {0, 1, 1, 1},
                                            {0, 0, 0, 1}, {0, 1, 0, 1, 1}, {0, 2},       {1, 2},
                                            {0, 1, 2},    {0, 2, 1},    {0, 0, 2},       {0, 1, 1, 2},
                                            {0, 2, 2, 1}, {0, 1, 2, 1}, {0, 0, 1, 2},    {0, 2, 1, 1, 2}};
  std::vector<Permutation> order4, order2;
  m12.for_each_element([&](const Permutation& x) {
    auto o = x.order();
    if (o == g[1].order()) order4.push_back(x);
    if (o == g[2].order()) order2.push_back(x);
    return true;
  });
  auto screen = [&](const std::vector<Permutation>& imgs, std::size_t used) {
    for (const auto& w : words) {
      if (std::any_of(w.begin(), w.end(), [&](int i) { return static_cast<std::size_t>(i) >= used; })) continue;
      if (word_order(imgs, w) != word_order(g, w)) return false;
    }
    return true;
  };
  // An 11-cycle power from the other rational class forces an outer automorphism.
  for (std::int64_t e : {2, 6, 7, 8, 10}) {
    Permutation a0 = g[0].pow(e);
    for (const auto& a1 : order4) {
      if (!screen({a0, a1}, 2)) continue;
      for (const auto& a2 : order2) {
        std::vector<Permutation> imgs{a0, a1, a2};
        if (!screen(imgs, 3)) continue;
        std::vector<Permutation> diag_gens;
        for (std::size_t i = 0; i < 3; ++i) diag_gens.push_back(pair_perm(g[i], imgs[i]));
        GeneratedGroup d(24, diag_gens);
        if (d.order() != 95040) continue;
        // Outer: the stabilizer of point 0 must move all of the second copy as one orbit.
        auto stab = d.with_base({0});
        std::vector<Permutation> stab_gens = stab.level(1 < stab.chain_length() ? 1 : 0).generators;
        auto orbs = orbits(24, stab_gens);
        bool transitive_on_copy = std::any_of(orbs.begin(), orbs.end(), [](const auto& o) {
          return o.size() == 12 && o.front() == 12;
        });
        if (!transitive_on_copy) continue;
        // Look for a part-swapping element normalizing the diagonal group.
        GeneratedGroup found;
        bool ok = false;
        m12.for_each_element([&](const Permutation& u) {
          std::vector<Point> img(24);
          for (Point i = 0; i < 12; ++i) {
            img[i] = 12 + i;
            img[12 + i] = u[i];
          }
          Permutation tau = Permutation::unchecked(std::move(img));
          if (!normalizes(tau, d)) return true;
          auto gens = diag_gens;
          gens.push_back(tau);
          found = GeneratedGroup(24, std::move(gens));
          ok = found.order() == 190080;
          return !ok;
        });
        if (ok) {
          found.set_name("Aut(M12)");
          return found;
        }
      }
    }
  }
  throw std::logic_error("Aut(M12) construction failed");
}

GeneratedGroup sym6_variant(int which) {
  // which: 0 PGL2(9), 1 M10
  auto f = GaloisField::of_order(9);
  auto s = sl2_spec(f);
  auto base = projective_action(s);
  MatrixGroupSpec d = s;
  d.generators = {diag({f.primitive_element(), f.one()})};
  auto delta = projective_action(d).generators()[0];
  MatrixGroupSpec fr = s;
  fr.generators.clear();
  fr.field_automorphisms = {1};
  auto phi = projective_action(fr).generators()[0];
  auto gens = base.generators();
  gens.push_back(which == 0 ? delta : delta * phi);
  GeneratedGroup g(base.degree(), std::move(gens));
  g.set_name(which == 0 ? "PGL2(9)" : "M10");
  return g;
}

}  // namespace

std::vector<std::string> literature_names() {
  return {"M12", "Aut(M12)", "G2(2)", "PGL2(9)", "M10", "PGammaL2(9)", "Sym(6)", "Aut(G2(3))"};
}

GeneratedGroup literature_group(const std::string& name) {
  if (name == "M12") {
    static const GeneratedGroup g = build_m12();
    return g;
  }
  if (name == "Aut(M12)") {
    static const GeneratedGroup g = build_aut_m12();
    return g;
  }
  if (name == "G2(2)") {
    auto g = psu3_field_extension(3);
    g.set_name("G2(2)");
    return g;
  }
  if (name == "PGL2(9)") return sym6_variant(0);
  if (name == "M10") return sym6_variant(1);
  if (name == "PGammaL2(9)") return pgammal2(9);
  if (name == "Sym(6)") {
    auto g = psigmal2(9);
    g.set_name("Sym(6)");
    return g;
  }
  if (name == "Aut(G2(3))") throw std::invalid_argument("Aut(G2(3)) is not built in this configuration");
  throw std::invalid_argument("unknown literature group: " + name);
}

// ---- serialization ----

nlohmann::json group_to_json(const GeneratedGroup& g, const nlohmann::json& extra_metadata) {
  nlohmann::json j;
  j["name"] = g.name();
  j["degree"] = g.degree();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& s : g.generators()) gens.push_back(s.image_vector());
  j["generators"] = std::move(gens);
  nlohmann::json meta = extra_metadata.is_object() ? extra_metadata : nlohmann::json::object();
  meta["order"] = g.order();
  j["metadata"] = std::move(meta);
  return j;
}

GeneratedGroup group_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_unsigned() || !j.contains("generators") ||
      !j["generators"].is_array()) {
    throw std::invalid_argument("malformed group file: need degree and generators");
  }
  const auto n = j["degree"].get<std::size_t>();
  std::vector<Permutation> gens;
  for (const auto& row : j["generators"]) {
    if (!row.is_array() || row.size() != n) throw std::invalid_argument("malformed group file: generator length");
    std::vector<Point> img;
    for (const auto& x : row) {
      if (!x.is_number_unsigned()) throw std::invalid_argument("malformed group file: non-integer image");
      img.push_back(x.get<Point>());
    }
    gens.emplace_back(std::move(img));
  }
  GeneratedGroup g(n, std::move(gens));
  if (j.contains("name") && j["name"].is_string()) g.set_name(j["name"].get<std::string>());
  if (j.contains("metadata") && j["metadata"].contains("order") && j["metadata"]["order"].get<std::uint64_t>() != g.order()) {
    throw std::invalid_argument("malformed group file: recorded order disagrees with generators");
  }
  return g;
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << content;
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace semisym
