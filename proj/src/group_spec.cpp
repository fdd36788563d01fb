#include "hopfmin/group_spec.hpp"

#include <cctype>

namespace hopfmin {

namespace {

/// Angle token inside parentheses: "pi/2" → 2, "pi/3" → 3, "pi/5" → 5.
int parse_angle_denominator(const std::string& s) {
  if (s == "pi/2") return 2;
  if (s == "pi/3") return 3;
  if (s == "pi/4") return 4;
  if (s == "pi/5") return 5;
  return 0;
}

[[noreturn]] void bad_spec(const std::string& text) {
  throw error(errc::degenerate_spec, "unrecognized group spec '" + text + "'");
}

} // namespace

group_spec group_spec::parse(const std::string& text) {
  // Shape: letter '(' args ')'
  if (text.size() < 4 || text[1] != '(' || text.back() != ')') bad_spec(text);
  const char fam = text[0];
  const std::string args = text.substr(2, text.size() - 3);
  const auto comma = args.find(',');
  const std::string first = args.substr(0, comma);
  const std::string second = comma == std::string::npos ? "" : args.substr(comma + 1);

  auto parse_int = [&](const std::string& s) {
    if (s.empty()) bad_spec(text);
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) bad_spec(text);
    const int v = std::stoi(s);
    if (v < 1) bad_spec(text);
    return v;
  };

  switch (fam) {
    case 'C': {
      if (second.empty()) bad_spec(text);
      return cyclic(parse_int(first), parse_int(second));
    }
    case 'D': {
      if (second.empty()) return dihedral(parse_int(first));
      if (parse_angle_denominator(second) != 2) bad_spec(text);
      return dihedral_right(parse_int(first));
    }
    case 'T': {
      const int d = parse_angle_denominator(first);
      if (d == 2) return fixed(lifted_family::t_half);
      if (d == 3) return fixed(lifted_family::t_third);
      bad_spec(text);
    }
    case 'O': {
      const int d = parse_angle_denominator(first);
      if (d == 2) return fixed(lifted_family::o_half);
      if (d == 3) return fixed(lifted_family::o_third);
      if (d == 4) return fixed(lifted_family::o_quarter);
      bad_spec(text);
    }
    case 'I': {
      const int d = parse_angle_denominator(first);
      if (d == 2) return fixed(lifted_family::i_half);
      if (d == 3) return fixed(lifted_family::i_third);
      if (d == 5) return fixed(lifted_family::i_fifth);
      bad_spec(text);
    }
    default: bad_spec(text);
  }
}

std::string group_spec::str() const {
  switch (family) {
    case lifted_family::c_mn:
      return "C(" + std::to_string(m) + "," + std::to_string(n) + ")";
    case lifted_family::d_l: return "D(" + std::to_string(l) + ")";
    case lifted_family::d_l_right: return "D(" + std::to_string(l) + ",pi/2)";
    case lifted_family::t_half: return "T(pi/2)";
    case lifted_family::t_third: return "T(pi/3)";
    case lifted_family::o_half: return "O(pi/2)";
    case lifted_family::o_third: return "O(pi/3)";
    case lifted_family::o_quarter: return "O(pi/4)";
    case lifted_family::i_half: return "I(pi/2)";
    case lifted_family::i_third: return "I(pi/3)";
    case lifted_family::i_fifth: return "I(pi/5)";
  }
  throw error(errc::degenerate_spec, "unknown family");
}

std::pair<int, int> group_spec::angle_labels() const {
  switch (family) {
    case lifted_family::c_mn: return {m, n};
    case lifted_family::d_l: return {2, 2};
    case lifted_family::d_l_right: return {l, 2};
    case lifted_family::t_half: return {3, 3};
    case lifted_family::t_third: return {2, 3};
    case lifted_family::o_half: return {4, 3};
    case lifted_family::o_third: return {4, 2};
    case lifted_family::o_quarter: return {2, 3};
    case lifted_family::i_half: return {3, 5};
    case lifted_family::i_third: return {2, 5};
    case lifted_family::i_fifth: return {2, 3};
  }
  throw error(errc::degenerate_spec, "unknown family");
}

std::size_t group_spec::expected_order() const {
  const auto M = static_cast<std::size_t>(m), N = static_cast<std::size_t>(n),
             L = static_cast<std::size_t>(l);
  switch (family) {
    case lifted_family::c_mn: return 2 * M * N;
    case lifted_family::d_l: return 8 * L;
    case lifted_family::d_l_right: return 4 * L * L;
    case lifted_family::t_half: return 144;
    case lifted_family::t_third: return 96;
    case lifted_family::o_half: return 576;
    case lifted_family::o_third: return 384;
    case lifted_family::o_quarter: return 288;
    case lifted_family::i_half: return 3600;
    case lifted_family::i_third: return 2400;
    case lifted_family::i_fifth: return 1440;
  }
  throw error(errc::degenerate_spec, "unknown family");
}

std::size_t group_spec::genus() const {
  const auto [mm, nn] = angle_labels();
  // 1 + (1 − 1/m − 1/n)·|G|/2, always integral.
  const long long numer =
      2LL * static_cast<long long>(expected_order()) * (mm * nn - nn - mm);
  return static_cast<std::size_t>(1 + numer / (4LL * mm * nn));
}

std::vector<group_spec> canonical_specs() {
  return {group_spec::cyclic(2, 2),  group_spec::cyclic(2, 3),
          group_spec::dihedral(2),   group_spec::dihedral(3),
          group_spec::dihedral_right(2), group_spec::dihedral_right(3),
          group_spec::fixed(lifted_family::t_half), group_spec::fixed(lifted_family::t_third),
          group_spec::fixed(lifted_family::o_half), group_spec::fixed(lifted_family::o_third),
          group_spec::fixed(lifted_family::o_quarter), group_spec::fixed(lifted_family::i_half),
          group_spec::fixed(lifted_family::i_third), group_spec::fixed(lifted_family::i_fifth)};
}

} // namespace hopfmin
