#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilb/certificates.hpp"

namespace hilb {

class CertificateFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CorpusEntry {
  std::string file;
  Certificate cert;
  /// Negative controls name the clause at which they must fail.
  std::optional<std::string> expected_failure;
};

/// Reads one certificate document (JSON). Throws CertificateFormatError or ParseError.
CorpusEntry parse_certificate(const std::string& text, const std::string& file = "<text>");
CorpusEntry load_certificate(const std::filesystem::path& path);
/// All *.cert files of a directory, sorted by file name.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

struct EntryOutcome {
  std::string file;
  std::string locus;
  std::string kind;
  CertificateReport report;
  std::optional<std::string> expected_failure;
  /// Passed, or failed exactly where a negative control is meant to.
  bool ok = false;
  double seconds = 0;
};

EntryOutcome run_entry(const CorpusEntry& entry);
/// Verifies entries on `jobs` threads; the result is in input order.
std::vector<EntryOutcome> run_corpus(const std::vector<CorpusEntry>& entries, unsigned jobs = 1);

}  // namespace hilb
