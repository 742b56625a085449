#pragma once

#include <stdexcept>

namespace isogame::formulas {

// q = ceil(a/b), a >= 0, b > 0
constexpr int ceil_div(int a, int b) { return (a + b - 1) / b; }

// exact game isolation numbers of cycles, n >= 4
constexpr int cycle_d(int n) {
  return n % 5 == 0 ? 2 * ceil_div(n, 5) : 2 * ceil_div(n, 5) - 1;
}
constexpr int cycle_s(int n) {
  return n % 5 == 4 ? 2 * (n / 5) + 1 : 2 * (n / 5);
}

// exact game isolation numbers of paths, n >= 1
constexpr int path_d(int n) {
  return n % 5 == 0 ? (2 * n + 1) / 5 - 1 : (2 * n + 1) / 5;
}
constexpr int path_s(int n) { return (2 * n + 2) / 5; }

// bracket for paths, n >= 6: low <= iota_g(P_n) <= iota_g'(P_n) <= high
constexpr int path_bracket_low(int n) { return ceil_div(2 * n, 5) - 1; }
constexpr int path_bracket_high(int n) { return (2 * n + 2) / 5; }

// guarantees of the run-building Staller on cycles (n >= 6) and paths
constexpr int run_staller_cycle_d_min(int n) {
  int a = 2 * ceil_div(n, 5), b = 2 * ceil_div(n - 4, 5) + 1;
  return a < b ? a : b;
}
constexpr int run_staller_cycle_s_min(int n) {
  int a = 2 * ceil_div(n - 3, 5), b = 2 * ceil_div(n - 4, 5) + 1;
  return a < b ? a : b;
}
constexpr int run_staller_path_s_min(int n) {
  int a = 2 * ceil_div(n - 2, 5), b = 2 * ceil_div(n - 3, 5) + 1;
  return a < b ? a : b;
}

// guarantees of the window-playing Dominator on cycles (any n >= 6) and on
// paths (n = 0 or 4 mod 5 only; other residues have no window guarantee)
constexpr int window_dominator_cycle_d_max(int n) { return cycle_d(n); }
constexpr int window_dominator_cycle_s_max(int n) { return cycle_s(n); }
inline int window_dominator_path_d_max(int n) {
  if (n % 5 != 0 && n % 5 != 4)
    throw std::invalid_argument("path window bound needs n = 0 or 4 mod 5");
  return ceil_div(2 * n, 5) - 1;
}

constexpr int half_bound(int n) { return n / 2; }
constexpr int tree_bound(int n) { return 5 * n / 11; }

// conjectured bounds, reported but never asserted
constexpr int conjecture_no_k2_bound(int n) { return ceil_div(3 * n, 7); }
constexpr bool conjecture_min_degree_two_holds(int value, int n) { return 7 * value <= 3 * n; }

}  // namespace isogame::formulas
