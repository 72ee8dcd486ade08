#ifndef RCC5_RELATION_HPP
#define RCC5_RELATION_HPP

#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace rcc5 {

/// The five basic RCC-5 relations, in canonical index order.
/// The index is stable: it fixes bit positions and serialization order.
enum class Basic : unsigned { DR = 0, PO = 1, PP = 2, PPI = 3, EQ = 4 };

inline constexpr int kNumBasic = 5;
inline constexpr std::array<const char*, kNumBasic> kBasicNames = {
    "DR", "PO", "PP", "PPI", "EQ"};

/// DR, PO and EQ are symmetric; PP and PPI swap.
inline constexpr Basic converse(Basic b) {
  constexpr std::array<Basic, kNumBasic> conv = {
      Basic::DR, Basic::PO, Basic::PPI, Basic::PP, Basic::EQ};
  return conv[static_cast<unsigned>(b)];
}

inline constexpr const char* name(Basic b) {
  return kBasicNames[static_cast<unsigned>(b)];
}

/// An RCC-5 relation: a set of basic relations stored as a 5-bit mask.
/// The empty set is the null relation (bottom), the full set the
/// universal relation (top).
class Relation {
 public:
  constexpr Relation() = default;
  explicit constexpr Relation(unsigned bits) : bits_(bits & kFullMask) {}

  static constexpr Relation none() { return Relation(0); }
  static constexpr Relation full() { return Relation(kFullMask); }
  static constexpr Relation only(Basic b) {
    return Relation(1u << static_cast<unsigned>(b));
  }

  constexpr unsigned bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_full() const { return bits_ == kFullMask; }
  constexpr bool contains(Basic b) const {
    return bits_ & (1u << static_cast<unsigned>(b));
  }
  constexpr int size() const {
    int n = 0;
    for (unsigned m = bits_; m; m &= m - 1) ++n;
    return n;
  }

  constexpr Relation with(Basic b) const {
    return Relation(bits_ | (1u << static_cast<unsigned>(b)));
  }
  constexpr Relation operator&(Relation o) const {
    return Relation(bits_ & o.bits_);
  }
  constexpr Relation operator|(Relation o) const {
    return Relation(bits_ | o.bits_);
  }
  constexpr Relation& operator&=(Relation o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr Relation& operator|=(Relation o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool subset_of(Relation o) const {
    return (bits_ & o.bits_) == bits_;
  }

  constexpr Relation converse() const {
    unsigned out = 0;
    for (unsigned i = 0; i < kNumBasic; ++i)
      if (bits_ & (1u << i))
        out |= 1u << static_cast<unsigned>(rcc5::converse(Basic(i)));
    return Relation(out);
  }

  friend constexpr bool operator==(Relation, Relation) = default;
  friend constexpr auto operator<=>(Relation a, Relation b) {
    return a.bits_ <=> b.bits_;
  }

  /// Canonical text form: members in index order, e.g. "{DR,PO,EQ}";
  /// "{}" for the null relation.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < kNumBasic; ++i) {
      if (!(bits_ & (1u << i))) continue;
      if (!first) out += ',';
      out += kBasicNames[i];
      first = false;
    }
    out += '}';
    return out;
  }

  /// Parses "{DR,PO}" (case-insensitive, whitespace allowed after commas
  /// and braces), "{}" and the alias "TOP". Returns nullopt on bad input.
  static std::optional<Relation> parse(std::string_view text);

 private:
  static constexpr unsigned kFullMask = (1u << kNumBasic) - 1;
  uint8_t bits_ = 0;
};

inline constexpr int kNumRelations = 32;

namespace detail {
inline std::optional<Basic> parse_basic(std::string_view tok) {
  auto eq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (std::toupper(static_cast<unsigned char>(a[i])) != b[i]) return false;
    return true;
  };
  for (unsigned i = 0; i < kNumBasic; ++i)
    if (eq(tok, kBasicNames[i])) return Basic(i);
  return std::nullopt;
}
}  // namespace detail

inline std::optional<Relation> Relation::parse(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.empty()) return std::nullopt;
  if (text.front() != '{') {
    std::string upper;
    for (char c : text) upper += std::toupper(static_cast<unsigned char>(c));
    if (upper == "TOP") return Relation::full();
    return std::nullopt;
  }
  if (text.back() != '}') return std::nullopt;
  text = strip(text.substr(1, text.size() - 2));
  Relation out;
  while (!text.empty()) {
    size_t comma = text.find(',');
    std::string_view tok =
        strip(comma == std::string_view::npos ? text : text.substr(0, comma));
    auto b = detail::parse_basic(tok);
    if (!b) return std::nullopt;
    out = out.with(*b);
    if (comma == std::string_view::npos) break;
    text = strip(text.substr(comma + 1));
    if (text.empty()) return std::nullopt;  // trailing comma
  }
  return out;
}

/// A subclass of RCC-5: a set of relations stored as a 32-bit mask
/// indexed by relation bit pattern.
class Subclass {
 public:
  constexpr Subclass() = default;
  explicit constexpr Subclass(uint32_t bits) : bits_(bits) {}

  static constexpr Subclass none() { return Subclass(0); }
  static constexpr Subclass all() { return Subclass(0xffffffffu); }

  constexpr uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Relation r) const {
    return bits_ & (1u << r.bits());
  }
  constexpr int size() const {
    int n = 0;
    for (uint32_t m = bits_; m; m &= m - 1) ++n;
    return n;
  }
  constexpr Subclass with(Relation r) const {
    return Subclass(bits_ | (1u << r.bits()));
  }
  constexpr Subclass operator|(Subclass o) const {
    return Subclass(bits_ | o.bits_);
  }
  constexpr Subclass operator&(Subclass o) const {
    return Subclass(bits_ & o.bits_);
  }
  constexpr bool subset_of(Subclass o) const {
    return (bits_ & o.bits_) == bits_;
  }

  friend constexpr bool operator==(Subclass, Subclass) = default;
  friend constexpr auto operator<=>(Subclass a, Subclass b) {
    return a.bits_ <=> b.bits_;
  }

  /// Invokes f on each member relation in canonical mask order.
  template <typename F>
  void for_each(F&& f) const {
    for (unsigned m = 0; m < kNumRelations; ++m)
      if (bits_ & (1u << m)) f(Relation(m));
  }

  std::string to_string() const {
    std::string out;
    for_each([&](Relation r) {
      if (!out.empty()) out += ' ';
      out += r.to_string();
    });
    return out.empty() ? "(empty)" : out;
  }

 private:
  uint32_t bits_ = 0;
};

}  // namespace rcc5

#endif  // RCC5_RELATION_HPP
