// Writes graph6 catalogs for the catalog-driven tests:
//   graphs<n>.g6      every graph of order n up to isomorphism
//   connected<n>.g6   the connected ones
//   graphs_upto<k>.g6, connected_upto<k>.g6   orders 1..k, for every k
// and fails unless the counts match the published tables.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "catalog.hpp"
#include "factorspec/graph.hpp"

namespace {

// Graphs and connected graphs on n unlabeled vertices, n = 0..10.
constexpr std::size_t kAll[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668, 12005168};
constexpr std::size_t kConnected[] = {1, 1, 1, 2, 6, 21, 112, 853, 11117, 261080, 11716571};

} // namespace

int main(int argc, char **argv) {
  if (argc != 3) {
    std::cerr << "usage: catalog_gen OUTDIR MAX_ORDER\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  const auto max_order = static_cast<std::size_t>(std::stoul(argv[2]));
  if (max_order < 1 || max_order > 9) {
    std::cerr << "MAX_ORDER must be in 1..9\n";
    return 2;
  }
  std::filesystem::create_directories(dir);

  const auto graphs = catalog::generate(max_order);
  std::string all_so_far, conn_so_far;
  bool ok = true;
  for (std::size_t n = 1; n <= max_order; ++n) {
    const auto suffix = std::to_string(n) + ".g6";
    std::string all, conn;
    std::size_t connected = 0;
    for (const auto &g : graphs[n]) {
      const auto code = factorspec::to_graph6(g) + '\n';
      all += code;
      if (factorspec::is_connected(g)) {
        conn += code;
        ++connected;
      }
    }
    all_so_far += all;
    conn_so_far += conn;
    std::ofstream(dir / ("graphs" + suffix)) << all;
    std::ofstream(dir / ("connected" + suffix)) << conn;
    std::ofstream(dir / ("graphs_upto" + suffix)) << all_so_far;
    std::ofstream(dir / ("connected_upto" + suffix)) << conn_so_far;
    const bool match = graphs[n].size() == kAll[n] && connected == kConnected[n];
    ok = ok && match;
    std::cout << "n=" << n << " graphs=" << graphs[n].size() << " connected="
              << connected << (match ? "" : "  COUNT MISMATCH") << '\n';
  }
  return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
