#ifndef BIDEND_GOLDEN_HPP
#define BIDEND_GOLDEN_HPP

#include <string>
#include <vector>

namespace bidend {

/*
 * Golden-data regression: checked-in text files carry reference values in
 * the canonical encodings (they double as documentation of those
 * encodings), and the runner recomputes each one and diffs exactly.
 *
 * Check files: "decorations:" header, then [check] blocks with op / in /
 * out lines.  Table files (.tsv): an "#op" line, a header row of basis
 * encodings, then one value row per basis element.
 */

struct GoldenResult {
    std::string file;
    std::string description;
    long checks = 0;
    std::vector<std::string> mismatches;
    bool passed() const { return mismatches.empty(); }
};

GoldenResult run_golden_file(const std::string& path);

// All .txt/.tsv files under dir, sorted by name.
std::vector<GoldenResult> run_golden_dir(const std::string& dir);

struct GoldenListing {
    std::string file;
    std::string description;
};
std::vector<GoldenListing> list_golden_dir(const std::string& dir);

}  // namespace bidend

#endif
