#include "ffts/mappings.hpp"

#include <numeric>
#include <string>

#include "ffts/characters.hpp"

namespace ffts {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool is_bijection(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Permutation invert(const Permutation& perm) {
  Permutation out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = i;
  return out;
}

std::size_t permutation_order(const Permutation& perm) {
  std::vector<bool> visited(perm.size(), false);
  std::size_t order = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t i = start; !visited[i]; i = perm[i]) {
      visited[i] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

TableMap as_table(const GroupSpec& spec, const MappingJ& j) {
  return std::visit(
      overloaded{
          [&](const TableMap& t) {
            if (t.images.size() != spec.order() || !is_bijection(t.images)) {
              throw DomainError("table is not a bijection on " + spec.to_string());
            }
            return t;
          },
          [&](const CyclicScalar& c) {
            if (spec.rank() != 1) throw DomainError("scalar mapping needs a cyclic group");
            const std::int64_t n = spec.modulus(0);
            if (std::gcd(mod(c.l, n), n) != 1) {
              throw DomainError("l = " + std::to_string(c.l) + " is not coprime to " + std::to_string(n));
            }
            TableMap t{Permutation(spec.order())};
            for (std::int64_t x = 0; x < n; ++x) t.images[x] = static_cast<std::size_t>(mul_mod(x, c.l, n));
            return t;
          },
          [&](const MatrixMap& mm) {
            if (!spec.is_homogeneous()) throw DomainError("matrix mapping needs a group (Z/n)^m");
            if (mm.m.modulus() != spec.modulus(0) || static_cast<std::size_t>(mm.m.dim()) != spec.rank()) {
              throw DomainError("matrix shape or modulus does not match " + spec.to_string());
            }
            if (!is_invertible(mm.m)) throw DomainError("matrix " + mm.m.to_string() + " is not invertible");
            TableMap t{Permutation(spec.order())};
            for (std::size_t i = 0; i < spec.order(); ++i) {
              GroupElement g = element_at(spec, i);
              t.images[i] = index_of(spec, GroupElement{mm.m.apply(g.residues)});
            }
            return t;
          },
      },
      j);
}

std::int64_t dual_angle_numerator(const GroupSpec& spec, const TableMap& j, std::size_t h,
                                  std::size_t x) {
  const std::int64_t a = char_angle_numerator(spec, element_at(spec, j.images[x]), element_at(spec, h));
  return mod(-a, spec.exponent());
}

std::complex<double> dual_value(const GroupSpec& spec, const TableMap& j, std::size_t h, std::size_t x) {
  return unit_root(dual_angle_numerator(spec, j, h, x), spec.exponent());
}

bool DualMap::lands_in_dual() const {
  for (const auto& c : characters) {
    if (!c) return false;
  }
  return true;
}

bool DualMap::is_isomorphism() const {
  if (!lands_in_dual()) return false;
  Permutation images;
  images.reserve(characters.size());
  for (const auto& c : characters) images.push_back(*c);
  return is_bijection(images);
}

TableMap DualMap::table() const {
  if (!is_isomorphism()) throw DomainError("dual map is not an isomorphism onto the dual group");
  TableMap t;
  for (const auto& c : characters) t.images.push_back(*c);
  return t;
}

namespace {

// With verify_rows false the caller guarantees j is a homomorphism, so each
// j-hat(h) is a character and the generators determine it.
DualMap dual_of_table(const GroupSpec& spec, const TableMap& table, bool verify_rows) {
  const std::int64_t big = spec.exponent();
  const std::size_t order = spec.order();

  // Standard generators e_i and their canonical indices.
  std::vector<std::size_t> generators;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    GroupElement e = identity(spec);
    e.residues[i] = spec.modulus(i) > 1 ? 1 : 0;
    generators.push_back(index_of(spec, e));
  }

  const auto elements = verify_rows ? enumerate(spec) : std::vector<GroupElement>{};
  DualMap out;
  out.characters.resize(order);
  for (std::size_t h = 0; h < order; ++h) {
    // A character chi_k satisfies chi_k(e_i) = e_{n_i}(k_i); read k off the
    // generators, then confirm the whole row against chi_k exactly.
    GroupElement k = identity(spec);
    bool candidate = true;
    for (std::size_t i = 0; i < spec.rank() && candidate; ++i) {
      const std::int64_t step = big / spec.modulus(i);
      const std::int64_t a = dual_angle_numerator(spec, table, h, generators[i]);
      if (a % step != 0) {
        candidate = false;
      } else {
        k.residues[i] = a / step;
      }
    }
    for (std::size_t x = 0; verify_rows && x < order && candidate; ++x) {
      candidate = dual_angle_numerator(spec, table, h, x) == char_angle_numerator(spec, k, elements[x]);
    }
    if (candidate) out.characters[h] = index_of(spec, k);
  }
  return out;
}

}  // namespace

DualMap dual(const GroupSpec& spec, const MappingJ& j) { return dual_of_table(spec, as_table(spec, j), true); }

HomomorphismCheck is_homomorphism(const GroupSpec& spec, const MappingJ& j) {
  const TableMap table = as_table(spec, j);
  if (table.images[0] != 0) return {false, std::make_pair(std::size_t{0}, std::size_t{0})};
  // Additivity along each standard generator implies additivity everywhere.
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    GroupElement e = identity(spec);
    e.residues[i] = spec.modulus(i) > 1 ? 1 : 0;
    const std::size_t g = index_of(spec, e);
    for (std::size_t x = 0; x < spec.order(); ++x) {
      if (table.images[add_index(spec, x, g)] != add_index(spec, table.images[x], table.images[g])) {
        return {false, std::make_pair(x, g)};
      }
    }
  }
  return {};
}

Permutation induced_p(const GroupSpec& spec, const MappingJ& j) {
  const TableMap table = as_table(spec, j);
  if (!is_homomorphism(spec, table).is_homomorphism) {
    throw DomainError("j is not an isomorphism");
  }
  const TableMap dual_table = dual_of_table(spec, table, false).table();
  return compose(invert(dual_table.images), table.images);
}

ModMatrix matrix_induced_p(const ModMatrix& m) { return -(inverse(transpose(m)) * m); }

std::pair<GroupSpec, TableMap> product_mapping(const GroupSpec& spec_a, const MappingJ& ja,
                                               const GroupSpec& spec_b, const MappingJ& jb,
                                               std::size_t dim_cap) {
  GroupSpec spec = product(spec_a, spec_b, dim_cap);
  const TableMap ta = as_table(spec_a, ja);
  const TableMap tb = as_table(spec_b, jb);
  TableMap t{Permutation(spec.order())};
  const std::size_t nb = spec_b.order();
  for (std::size_t x = 0; x < spec_a.order(); ++x) {
    for (std::size_t y = 0; y < nb; ++y) t.images[x * nb + y] = ta.images[x] * nb + tb.images[y];
  }
  return {std::move(spec), std::move(t)};
}

std::vector<TableMap> enumerate_isomorphisms(const GroupSpec& spec) {
  // Candidate images of e_i are the dual elements killed by n_i.
  std::vector<std::vector<std::size_t>> candidates(spec.rank());
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    for (std::size_t k = 0; k < spec.order(); ++k) {
      if (spec.modulus(i) % element_order(spec, element_at(spec, k)) == 0) candidates[i].push_back(k);
    }
  }
  std::vector<TableMap> out;
  std::vector<std::size_t> choice(spec.rank(), 0);
  while (true) {
    TableMap t{Permutation(spec.order())};
    for (std::size_t x = 0; x < spec.order(); ++x) {
      GroupElement g = element_at(spec, x);
      GroupElement image = identity(spec);
      for (std::size_t i = 0; i < spec.rank(); ++i) {
        image = add(spec, image, scale(spec, g.residues[i], element_at(spec, candidates[i][choice[i]])));
      }
      t.images[x] = index_of(spec, image);
    }
    if (is_bijection(t.images)) out.push_back(std::move(t));

    std::size_t i = spec.rank();
    while (i > 0) {
      --i;
      if (++choice[i] < candidates[i].size()) break;
      choice[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace ffts
