// Regenerates fixtures/oeis/A*.txt from the catalog. Every value is checked
// against the printed prefix and the entry's oracle before it is written.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "rueppel/catalog.hpp"
#include "rueppel/oeis.hpp"

using namespace rueppel;

namespace {

std::string block(const CatalogEntry& e, const std::vector<Integer>& v, long from, long to, const std::string& what) {
  if (from > to) return {};
  Sequence<Integer> s{{v.begin() + (from - e.offset), v.begin() + (to - e.offset) + 1}, from};
  return format_bfile(s, {"indices " + std::to_string(from) + ".." + std::to_string(to) + ": " + what});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Write OEIS fixtures from the catalog"};
  std::string out_dir = "fixtures/oeis";
  std::size_t terms = 160;
  app.add_option("--out", out_dir, "output directory");
  app.add_option("-n", terms, "terms per fixture")->check(CLI::Range(64, 4096));
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  int status = 0;
  for (const auto& e : catalog()) {
    const auto v = e.generate(terms);
    const long first = e.offset;
    const long last = e.offset + long(terms) - 1;
    const long p0 = e.printed_start;
    const long p1 = e.printed_start + long(e.printed.size()) - 1;
    for (std::size_t i = 0; i < e.printed.size(); ++i) {
      if (!(v[std::size_t(p0 - first) + i] == e.printed[i])) {
        std::cerr << e.id << ": generator disagrees with printed prefix at " << p0 + long(i) << "\n";
        status = 1;
      }
    }
    std::string oracle_note = "no independent oracle";
    if (e.oracle) {
      const auto o = e.oracle(terms);
      for (std::size_t i = 0; i < terms; ++i) {
        const bool ok = e.oracle_abs_only ? v[i].abs() == o[i] : v[i] == o[i];
        if (!ok) {
          std::cerr << e.id << ": oracle disagrees at " << first + long(i) << "\n";
          status = 1;
        }
      }
      oracle_note = std::string("cross-checked against ") + e.oracle_description + (e.oracle_abs_only ? " (absolute values)" : "");
    }
    const std::string generated = std::string("catalog generator (") + to_string(e.kind) + "), " + oracle_note;
    std::string body = "# " + e.id + " " + e.description + "\n# offset " + std::to_string(e.offset) + ", " +
                       std::to_string(terms) + " terms\n";
    if (e.printed.empty()) {
      body += block(e, v, first, last, generated);
    } else {
      body += block(e, v, first, p0 - 1, generated);
      body += block(e, v, p0, p1, "printed reference prefix, reproduced by the " + generated);
      body += block(e, v, p1 + 1, last, generated);
    }
    std::ofstream(std::filesystem::path(out_dir) / (e.id + ".txt")) << body;
  }
  return status;
}
