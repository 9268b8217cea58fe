#include "ffts/group.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace ffts {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

void require_member(const GroupSpec& spec, const GroupElement& e) {
  if (!belongs_to(spec, e)) {
    throw DomainError("element does not belong to group " + spec.to_string());
  }
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw DomainError("malformed group spec '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::int64_t> moduli, std::size_t dim_cap)
    : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw DomainError("group spec needs at least one factor");
  for (std::int64_t n : moduli_) {
    if (n < 1) throw DomainError("cyclic factor order must be >= 1");
    if (static_cast<std::size_t>(n) > dim_cap / order_) {
      throw DomainError("group order exceeds dimension cap " +
                        std::to_string(dim_cap));
    }
    order_ *= static_cast<std::size_t>(n);
    exponent_ = std::lcm(exponent_, n);
  }
}

bool GroupSpec::is_homogeneous() const {
  for (std::int64_t n : moduli_) {
    if (n != moduli_.front()) return false;
  }
  return true;
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(moduli_[i]);
  }
  return out;
}

GroupSpec parse_group(std::string_view text, std::size_t dim_cap) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  std::vector<std::int64_t> moduli;
  std::string_view rest = s;
  while (true) {
    std::size_t cut = rest.find('x');
    std::string_view factor = rest.substr(0, cut);
    if (factor.size() < 2 || factor.front() != 'z') {
      throw DomainError("malformed group spec '" + std::string(text) + "'");
    }
    factor.remove_prefix(1);
    std::int64_t repeat = 1;
    if (std::size_t caret = factor.find('^'); caret != std::string_view::npos) {
      repeat = parse_int(factor.substr(caret + 1), text);
      factor = factor.substr(0, caret);
      if (repeat < 1) throw DomainError("group power must be >= 1");
    }
    std::int64_t n = parse_int(factor, text);
    if (repeat > 64) throw DomainError("group power too large");
    moduli.insert(moduli.end(), static_cast<std::size_t>(repeat), n);
    if (cut == std::string_view::npos) break;
    rest.remove_prefix(cut + 1);
  }
  return GroupSpec(std::move(moduli), dim_cap);
}

GroupSpec product(const GroupSpec& a, const GroupSpec& b, std::size_t dim_cap) {
  std::vector<std::int64_t> moduli = a.moduli();
  moduli.insert(moduli.end(), b.moduli().begin(), b.moduli().end());
  return GroupSpec(std::move(moduli), dim_cap);
}

std::vector<GroupElement> enumerate(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (std::size_t i = 0; i < spec.order(); ++i) out.push_back(element_at(spec, i));
  return out;
}

std::size_t index_of(const GroupSpec& spec, const GroupElement& e) {
  require_member(spec, e);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    idx = idx * static_cast<std::size_t>(spec.modulus(i)) +
          static_cast<std::size_t>(e.residues[i]);
  }
  return idx;
}

GroupElement element_at(const GroupSpec& spec, std::size_t index) {
  if (index >= spec.order()) throw DomainError("element index out of range");
  GroupElement e{std::vector<std::int64_t>(spec.rank())};
  for (std::size_t i = spec.rank(); i-- > 0;) {
    auto n = static_cast<std::size_t>(spec.modulus(i));
    e.residues[i] = static_cast<std::int64_t>(index % n);
    index /= n;
  }
  return e;
}

GroupElement identity(const GroupSpec& spec) {
  return GroupElement{std::vector<std::int64_t>(spec.rank(), 0)};
}

GroupElement make_element(const GroupSpec& spec, std::vector<std::int64_t> values) {
  if (values.size() != spec.rank()) {
    throw DomainError("element has wrong number of components");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = reduce(values[i], spec.modulus(i));
  }
  return GroupElement{std::move(values)};
}

bool belongs_to(const GroupSpec& spec, const GroupElement& e) {
  if (e.residues.size() != spec.rank()) return false;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    if (e.residues[i] < 0 || e.residues[i] >= spec.modulus(i)) return false;
  }
  return true;
}

GroupElement add(const GroupSpec& spec, const GroupElement& a,
                 const GroupElement& b) {
  require_member(spec, a);
  require_member(spec, b);
  GroupElement out = a;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    out.residues[i] = (a.residues[i] + b.residues[i]) % spec.modulus(i);
  }
  return out;
}

GroupElement neg(const GroupSpec& spec, const GroupElement& a) {
  require_member(spec, a);
  GroupElement out = a;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    out.residues[i] = reduce(-a.residues[i], spec.modulus(i));
  }
  return out;
}

GroupElement scale(const GroupSpec& spec, std::int64_t k, const GroupElement& a) {
  require_member(spec, a);
  GroupElement out = a;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    std::int64_t n = spec.modulus(i);
    out.residues[i] = reduce(reduce(k, n) * a.residues[i], n);
  }
  return out;
}

std::int64_t element_order(const GroupSpec& spec, const GroupElement& a) {
  require_member(spec, a);
  std::int64_t ord = 1;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    std::int64_t n = spec.modulus(i);
    ord = std::lcm(ord, n / std::gcd(n, a.residues[i]));
  }
  return ord;
}

std::int64_t scalar_product(const GroupSpec& spec, const GroupElement& h,
                            const GroupElement& g) {
  if (!spec.is_homogeneous()) {
    throw DomainError("scalar product needs a homogeneous group (Z/n)^m");
  }
  require_member(spec, h);
  require_member(spec, g);
  std::int64_t n = spec.modulus(0);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < spec.rank(); ++i) {
    acc = (acc + h.residues[i] * g.residues[i]) % n;
  }
  return acc;
}

std::size_t add_index(const GroupSpec& spec, std::size_t a, std::size_t b) {
  std::size_t out = 0;
  std::size_t place = 1;
  for (std::size_t i = spec.rank(); i-- > 0;) {
    auto n = static_cast<std::size_t>(spec.modulus(i));
    out += ((a % n + b % n) % n) * place;
    a /= n;
    b /= n;
    place *= n;
  }
  return out;
}

std::size_t neg_index(const GroupSpec& spec, std::size_t a) {
  std::size_t out = 0;
  std::size_t place = 1;
  for (std::size_t i = spec.rank(); i-- > 0;) {
    auto n = static_cast<std::size_t>(spec.modulus(i));
    out += ((n - a % n) % n) * place;
    a /= n;
    place *= n;
  }
  return out;
}

}  // namespace ffts
