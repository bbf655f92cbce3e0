#include "jpca/map_library.hpp"

#include <algorithm>

#include "jpca/rulespec.hpp"

namespace jpca {
namespace {

inline constexpr const char* kSpan4Tables[32] = {
    "0000111100101101",
    "0000111101001011",
    "0001110000111110",
    "0001111001011010",
    "0010100101101101",
    "0010110100001111",
    "0011001101100011",
    "0011001101101100",
    "0011001110010011",
    "0011001110011100",
    "0011010100111100",
    "0011010111000011",
    "0011011000110011",
    "0011011011001100",
    "0011100001111100",
    "0011100100110011",
    "0011100111001100",
    "0011101000111100",
    "0011101011000011",
    "0011110001010011",
    "0011110001011100",
    "0011110010100011",
    "0011110010101100",
    "0011111000011100",
    "0100100101101011",
    "0100101100001111",
    "0101101000011110",
    "0101101001111000",
    "0110101101001001",
    "0110110100101001",
    "0111100001011010",
    "0111110000111000",
};

struct Props {
  ExpectedProps v;
  Props& surj(bool b) { v.surjective = b; return *this; }
  Props& lperm(bool b) { v.left_permutative = b; return *this; }
  Props& rperm(bool b) { v.right_permutative = b; return *this; }
  Props& lclose(bool b) { v.left_closing = b; return *this; }
  Props& rclose(bool b) { v.right_closing = b; return *this; }
  Props& inj(bool b) { v.injective = b; return *this; }
  Props& zero(bool b) { v.fixes_zero = b; return *this; }
  Props& degree(std::string d) { v.degree_note = std::move(d); return *this; }
};

}  // namespace

MapLibrary::MapLibrary() {
  auto add = [&](std::string name, std::string spec, std::string doc, const Props& p = {}) {
    entries_.push_back(MapEntry{std::move(name), std::move(spec), std::move(doc), p.v});
  };

  add("A", "poly(N=2):x0+x1", "addition rule; linear, everywhere 2-to-1",
      Props{}.surj(true).lperm(true).rperm(true).lclose(true).rclose(true).inj(false).degree("2"));
  add("B", "poly(N=2):x0+x1x2", "left permutative, degree 1, not right closing",
      Props{}.surj(true).lperm(true).rperm(false).lclose(true).rclose(false).inj(false).degree("1"));
  add("B_rev", "poly(N=2):x0x1+x2", "mirror image of B",
      Props{}.surj(true).lperm(false).rperm(true).lclose(false).rclose(true).inj(false).degree("1"));
  add("C", "compose(B,B_rev)", "closing on neither side",
      Props{}.surj(true).lclose(false).rclose(false).inj(false).degree("1"));
  add("D", "shift(C,-2)", "C followed by two left shifts; fixes the no-adjacent-ones words",
      Props{}.surj(true).lclose(false).rclose(false).inj(false).degree("1"));
  add("E", "compose(B,A)", "addition rule followed by B",
      Props{}.surj(true).lperm(true).rclose(false).inj(false).degree("2"));
  add("G", "poly(N=2):x(-1)+x0x1+x2", "bipermutative but not linear",
      Props{}.surj(true).lperm(true).rperm(true).lclose(true).rclose(true).inj(false).degree("2"));
  add("U", "poly(N=2):x0+x(-2)x1x2+x(-2)x(-1)x1x2",
      "automorphism: flips the middle symbol inside the frame 10*11",
      Props{}.surj(true).lclose(true).rclose(true).inj(true).degree("1"));
  add("J", "compose(A,U)", "biclosing, permutative on neither side",
      Props{}.surj(true).lperm(false).rperm(false).lclose(true).rclose(true).inj(false).degree("2"));
  add("H", "compose(A,compose(A,U))", "like J with degree 4",
      Props{}.surj(true).lperm(false).rperm(false).lclose(true).rclose(true).inj(false).degree("4"));
  add("K", "compose(B,U)", "left closing only, permutative on neither side",
      Props{}.surj(true).lperm(false).rperm(false).lclose(true).rclose(false).inj(false).degree("1"));
  add("F", "poly(N=2):x0+1", "symbol flip involution",
      Props{}.surj(true).lperm(true).rperm(true).lclose(true).rclose(true).inj(true).degree("1"));
  add("B3", "poly(N=3):x0+x1x2", "B over three symbols",
      Props{}.surj(true).lperm(true).rclose(false).inj(false).degree("1"));
  // W transposes 0 and 2 at position 0 exactly when the next symbol is 1.
  add("W", "table(N=3,span=2):020111202", "conditional transposition automorphism",
      Props{}.surj(true).lclose(true).rclose(true).inj(true).degree("1"));
  add("LW3", "compose(poly(N=3):x0+x2,W)", "x0+x2 after W; biclosing of degree 9",
      Props{}.surj(true).lclose(true).rclose(true).inj(false).degree("9"));

  // span-4 catalogue: onto, fix the all-zeros point, not linear in an end
  // variable. Entries 2, 6, 7 and 16 are one-to-one.
  add("span4/1", "table(N=2,span=4):0000111100101101", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/2", "table(N=2,span=4):0000111101001011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(true).zero(true));
  add("span4/3", "table(N=2,span=4):0001110000111110", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/4", "table(N=2,span=4):0001111001011010", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/5", "table(N=2,span=4):0010100101101101", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/6", "table(N=2,span=4):0010110100001111", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(true).zero(true));
  add("span4/7", "table(N=2,span=4):0011001101100011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(true).zero(true));
  add("span4/8", "table(N=2,span=4):0011001101101100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/9", "table(N=2,span=4):0011001110010011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/10", "table(N=2,span=4):0011001110011100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/11", "table(N=2,span=4):0011010100111100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/12", "table(N=2,span=4):0011010111000011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/13", "table(N=2,span=4):0011011000110011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/14", "table(N=2,span=4):0011011011001100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/15", "table(N=2,span=4):0011100001111100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/16", "table(N=2,span=4):0011100100110011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(true).zero(true));
  add("span4/17", "table(N=2,span=4):0011100111001100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/18", "table(N=2,span=4):0011101000111100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/19", "table(N=2,span=4):0011101011000011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/20", "table(N=2,span=4):0011110001010011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/21", "table(N=2,span=4):0011110001011100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/22", "table(N=2,span=4):0011110010100011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/23", "table(N=2,span=4):0011110010101100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/24", "table(N=2,span=4):0011111000011100", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/25", "table(N=2,span=4):0100100101101011", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/26", "table(N=2,span=4):0100101100001111", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/27", "table(N=2,span=4):0101101000011110", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/28", "table(N=2,span=4):0101101001111000", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/29", "table(N=2,span=4):0110101101001001", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/30", "table(N=2,span=4):0110110100101001", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/31", "table(N=2,span=4):0111100001011010", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));
  add("span4/32", "table(N=2,span=4):0111110000111000", "span-4 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).inj(false).zero(true));

  // span-5 catalogue: the irregular onto maps, same conventions.
  add("span5/1", "table(N=2,span=5):00010111111010000001011111110000", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/2", "table(N=2,span=5):00011011011101001110010011110000", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/3", "table(N=2,span=5):00100010111100110010111000001111", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/4", "table(N=2,span=5):00101001011011010100100101101011", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/5", "table(N=2,span=5):00101110000011110010111011110000", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/6", "table(N=2,span=5):01000111000101111011100000001111", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/7", "table(N=2,span=5):01000111010010111000101101001011", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/8", "table(N=2,span=5):01001011100001110100101101001011", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/9", "table(N=2,span=5):01001101101100101000111010110010", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/10", "table(N=2,span=5):01001101101100101100110010110010", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/11", "table(N=2,span=5):01001101110100100011001111010010", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/12", "table(N=2,span=5):01001101110100100111000111010010", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/13", "table(N=2,span=5):01001101110100101111000011010010", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/14", "table(N=2,span=5):01001101111100000100110110110010", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/15", "table(N=2,span=5):01100001101010110110000101100111", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/16", "table(N=2,span=5):01101000011110010110000111101001", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/17", "table(N=2,span=5):01101011110000100100101100011101", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/18", "table(N=2,span=5):01110001101100100111000110001110", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/19", "table(N=2,span=5):01110010101101000111001001111000", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/20", "table(N=2,span=5):01111000010010110111100001111000", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/21", "table(N=2,span=5):01111000010010110111100010110100", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/22", "table(N=2,span=5):01111000010010110111100011110000", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/23", "table(N=2,span=5):01111000010011010111100010001110", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/24", "table(N=2,span=5):01111011100001000100101100001111", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/25", "table(N=2,span=5):01111011110000000100101100001111", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  add("span5/26", "table(N=2,span=5):01111011110000000100101101001011", "span-5 catalogue entry",
      Props{}.surj(true).lperm(false).rperm(false).zero(true));
  // derived span-4 families
  for (unsigned j = 1; j <= 32; ++j) {
    const std::string g = "span4/" + std::to_string(j);
    add("flip_post_span4/" + std::to_string(j), "compose(F," + g + ")",
        "flip after span-4 entry", Props{}.surj(true));
    add("flip_pre_span4/" + std::to_string(j), "compose(" + g + ",F)",
        "flip before span-4 entry", Props{}.surj(true));
    add("d_post_span4/" + std::to_string(j), "compose(A," + g + ")",
        "addition rule after span-4 entry", Props{}.surj(true));
  }
  for (unsigned j = 1; j <= 32; ++j) {
    // x0 + p_j(x1..x4): prepend an added identity coordinate to entry j
    const LocalRule g = parse_rulespec(std::string(kSpan4Tables[j - 1]).insert(0, "table(N=2,span=4):"));
    std::vector<std::uint8_t> table(32);
    for (unsigned x0 = 0; x0 < 2; ++x0)
      for (unsigned w = 0; w < 16; ++w)
        table[x0 * 16 + w] = static_cast<std::uint8_t>((x0 + g.table()[w]) % 2);
    std::string text = "table(N=2,span=5):";
    for (std::uint8_t v : table) text.push_back(char('0' + v));
    add("perm_plus_span4/" + std::to_string(j), text,
        "span-4 entry shifted one cell right and added to the identity",
        Props{}.surj(true).lperm(true));
  }

  std::sort(entries_.begin(), entries_.end(),
            [](const MapEntry& a, const MapEntry& b) { return a.name < b.name; });
}

const MapLibrary& MapLibrary::instance() {
  static const MapLibrary lib;
  return lib;
}

bool MapLibrary::contains(std::string_view name) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const MapEntry& e) { return e.name == name; });
}

const MapEntry& MapLibrary::entry(std::string_view name) const {
  for (const MapEntry& e : entries_)
    if (e.name == name) return e;
  throw std::invalid_argument("unknown map name '" + std::string(name) + "'");
}

LocalRule MapLibrary::resolve(std::string_view name) const {
  const MapEntry& e = entry(name);
  return parse_rulespec(e.spec, [this](std::string_view n) { return resolve(n); });
}

LocalRule MapLibrary::family(std::string_view kind, unsigned index) const {
  if (index < 1 || index > 32)
    throw std::invalid_argument("family index out of range: " + std::to_string(index));
  return resolve(std::string(kind) + "/" + std::to_string(index));
}

LocalRule MapLibrary::resolve_spec(std::string_view name_or_spec) const {
  if (contains(name_or_spec)) return resolve(name_or_spec);
  return parse_rulespec(name_or_spec, [this](std::string_view n) { return resolve(n); });
}

}  // namespace jpca
