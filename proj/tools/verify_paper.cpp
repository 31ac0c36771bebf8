#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "nilspec/lie.hpp"
#include "nilspec/matrix_io.hpp"
#include "nilspec/obstruction.hpp"
#include "report.hpp"

namespace nilspec::cli {

namespace {

struct CatalogueEntry {
  std::string label;
  std::filesystem::path algebra;
  std::filesystem::path automorphism;
};

struct EntryResult {
  std::string algebra_name;
  ExpansionCertificate certificate;
};

/// catalogue.txt: one "<label> <algebra file> <automorphism file>" per line.
std::vector<CatalogueEntry> read_catalogue(const std::filesystem::path& dir) {
  const auto index = dir / "catalogue.txt";
  std::ifstream in(index);
  if (!in) throw std::runtime_error("cannot open catalogue index " + index.string());
  std::vector<CatalogueEntry> entries;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto tokens = tokenize_line(text);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ParseError(index.string(), line_no, tokens.front().column,
                       "expected '<label> <algebra file> <automorphism file>'");
    }
    entries.push_back({std::string(tokens[0].text), dir / std::string(tokens[1].text), dir / std::string(tokens[2].text)});
  }
  if (entries.empty()) throw std::runtime_error("catalogue index " + index.string() + " lists no entries");
  return entries;
}

EntryResult run_entry(const CatalogueEntry& e) {
  try {
    const LieAlgebra g = read_lie_algebra_file(e.algebra);
    const QMat a = read_matrix_file(e.automorphism);
    const LieAutomorphism aut = check_automorphism(g, a);
    return {e.algebra.stem().string(), certify_expanding_on_cohomology(aut)};
  } catch (const ParseError&) {
    throw;
  } catch (const JacobiViolation& ex) {
    throw std::runtime_error(e.algebra.string() + ": " + ex.what());
  } catch (const std::exception& ex) {
    throw std::runtime_error(e.label + " (" + e.algebra.string() + ", " + e.automorphism.string() +
                             "): " + ex.what());
  }
}

/// Runs every entry on a small worker pool; results keep catalogue order.
std::vector<EntryResult> run_all(const std::vector<CatalogueEntry>& entries, unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, entries.size());
  std::vector<std::optional<EntryResult>> results(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < entries.size(); k = next++) {
      try {
        results[k] = run_entry(entries[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<EntryResult> out;
  for (auto& r : results) out.push_back(std::move(*r));
  return out;
}

constexpr std::size_t kGridMin = 3;
constexpr std::size_t kGridMax = 8;

std::vector<std::pair<std::string, Json>> grid_rows() {
  std::vector<std::pair<std::string, Json>> rows;
  for (std::size_t n = kGridMin; n <= kGridMax; ++n) {
    const auto spec =
        AttractorPairSpec::make(n, 2, 2, BettiVector::all_ones(n - 2), BettiVector::all_ones(n - 2));
    Json j = to_json(sphere_theorem_check(spec));
    j["kind"] = "sphere-check";
    j["n"] = n;
    j["q"] = {2, 2};
    rows.emplace_back("sphere-check n=" + std::to_string(n) + " q=(2,2)", std::move(j));
  }
  for (std::size_t n = kGridMin + 1; n <= kGridMax; ++n) {
    const auto spec =
        AttractorPairSpec::make(n, 3, 2, BettiVector::all_ones(n - 3), BettiVector::all_ones(n - 2));
    Json j = to_json(sphere_theorem_check(spec));
    j["kind"] = "sphere-check";
    j["n"] = n;
    j["q"] = {3, 2};
    rows.emplace_back("sphere-check n=" + std::to_string(n) + " q=(3,2)", std::move(j));
  }
  for (std::size_t n = kGridMin; n <= kGridMax; ++n) {
    const auto r = toric_corollary_check(n);
    Json j;
    j["kind"] = "toric";
    j["n"] = n;
    j["boundary_b1"] = r.boundary_b1;
    j["target_b1"] = r.target_b1;
    j["impossible"] = r.impossible;
    rows.emplace_back("toric n=" + std::to_string(n), std::move(j));
  }
  return rows;
}

std::string grid_summary(const Json& j) {
  if (j["kind"] == "toric") {
    const auto b = j["boundary_b1"].get<std::size_t>(), t = j["target_b1"].get<std::size_t>();
    return j["impossible"].get<bool>()
               ? "impossible (" + std::to_string(b) + " < " + std::to_string(t) + ")"
               : "not obstructed (" + std::to_string(b) + " >= " + std::to_string(t) + ")";
  }
  std::string s = j["verdict"].get<std::string>();
  if (j.contains("manifold_betti")) {
    s += " betti(M) =";
    for (const auto& b : j["manifold_betti"]) s += " " + std::to_string(b.get<std::size_t>());
  }
  if (j.contains("degree") && j["verdict"] == "Case1Contradiction") {
    s += " at l=" + std::to_string(j["degree"].get<long>());
  }
  return s;
}

std::vector<std::string> report_lines(const std::vector<CatalogueEntry>& entries,
                                      const std::vector<EntryResult>& results,
                                      const std::vector<std::pair<std::string, Json>>& grid, bool& alarm) {
  std::vector<std::string> lines;
  alarm = false;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    Json j = to_json(results[k].certificate);
    j["kind"] = "certificate";
    j["label"] = entries[k].label;
    j["algebra"] = results[k].algebra_name;
    alarm = alarm || results[k].certificate.alarm;
    lines.push_back(line(j));
  }
  for (const auto& [name, j] : grid) lines.push_back(line(j));
  return lines;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open golden file " + path.string());
  std::vector<std::string> lines;
  std::string text;
  while (std::getline(in, text)) {
    if (!text.empty()) lines.push_back(text);
  }
  return lines;
}

}  // namespace

std::vector<std::string> verify_paper_report(const std::filesystem::path& catalogue, unsigned jobs,
                                             bool& alarm) {
  const auto entries = read_catalogue(catalogue);
  const auto results = run_all(entries, jobs);
  return report_lines(entries, results, grid_rows(), alarm);
}

int verify_paper(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  const auto golden_path = options.golden.empty() ? options.catalogue / "golden.txt" : options.golden;
  std::vector<CatalogueEntry> entries;
  std::vector<EntryResult> results;
  try {
    entries = read_catalogue(options.catalogue);
    results = run_all(entries, options.jobs);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  bool alarm = false;
  const auto grid = grid_rows();
  const auto report = report_lines(entries, results, grid, alarm);

  if (options.machine) {
    for (const auto& l : report) out << l << '\n';
  } else {
    out << std::left << std::setw(28) << "entry" << std::setw(5) << "deg" << std::setw(5) << "dim"
        << std::setw(22) << "spectrum" << "verdict\n";
    for (std::size_t k = 0; k < entries.size(); ++k) {
      const auto& cert = results[k].certificate;
      out << std::setw(28) << entries[k].label << "automorphism "
          << to_string(cert.automorphism_verdict.verdict) << '\n';
      for (const auto& d : cert.degrees) {
        out << std::setw(28) << "" << std::setw(5) << d.degree << std::setw(5) << d.dimension
            << std::setw(21) << spectrum_string(d.char_poly) << " " << to_string(d.verdict.verdict) << '\n';
      }
      if (cert.alarm) out << std::setw(28) << "" << "ALARM: theorem contradiction\n";
    }
    out << '\n';
    for (const auto& [name, j] : grid) out << std::setw(28) << name << grid_summary(j) << '\n';
  }

  if (options.write_golden) {
    std::ofstream g(golden_path);
    if (!g) {
      err << "error: cannot write golden file " << golden_path.string() << '\n';
      return kInputError;
    }
    for (const auto& l : report) g << l << '\n';
    err << "wrote " << report.size() << " lines to " << golden_path.string() << '\n';
  }

  int status = kSuccess;
  if (alarm) {
    err << "ALARM: an expanding automorphism induced a non-expanding map on cohomology\n";
    status = kNegativeVerdict;
  }
  if (!options.write_golden) {
    std::vector<std::string> golden;
    try {
      golden = read_lines(golden_path);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }
    std::size_t mismatches = 0;
    const std::size_t common = std::min(golden.size(), report.size());
    for (std::size_t k = 0; k < common; ++k) {
      if (golden[k] != report[k]) {
        if (mismatches++ < 5) err << "golden mismatch at line " << k + 1 << ":\n  expected " << golden[k]
                                  << "\n  got      " << report[k] << '\n';
      }
    }
    if (golden.size() != report.size()) {
      err << "golden file has " << golden.size() << " lines, report has " << report.size() << '\n';
      ++mismatches;
    }
    if (mismatches) {
      status = kNegativeVerdict;
    } else if (!options.machine) {
      out << "\nall " << report.size() << " report lines match " << golden_path.filename().string() << '\n';
    }
  }
  return status;
}

}  // namespace nilspec::cli
