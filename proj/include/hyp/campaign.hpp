// Theorem-verification campaigns, JSON certificates, and witness rechecks.
#ifndef HYP_CAMPAIGN_HPP
#define HYP_CAMPAIGN_HPP

#include <hyp/generators.hpp>
#include <hyp/hyperbolicity.hpp>
#include <hyp/nuij.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hyp {

struct CampaignConfig {
  int trials = 0;
  int m_max = 4;  // degrees drawn from [1, m_max]
  int n_max = 3;  // variable counts drawn from [2, n_max]
  std::vector<Rational> s_values = default_s_sweep();
  SamplingConfig sampling;  // per-arm seeds are derived from `seed`
  std::uint64_t seed = 0;

  static std::vector<Rational> default_s_sweep();
};

// Self-contained, re-checkable certificate of a failed restriction: the
// polynomial, direction and base point are embedded so a verifier needs
// nothing but the report file.
struct WitnessBlock {
  std::string poly;  // canonical text, parseable with `nvars` variables
  int nvars = 0;
  std::vector<Rational> direction;
  std::vector<Rational> base;
  std::vector<Rational> restriction;  // coefficients c0..cd of the line restriction
};

WitnessBlock make_witness_block(const MultiPoly& p, std::span<const Rational> e, const Witness& w);

struct SweepResult {
  Rational s;
  std::string status;
  long samples = 0;
};

struct ForwardRecord {
  std::vector<std::string> word;      // letter variable names
  std::vector<std::string> sequence;  // rendered coefficient sequence of the word
  std::string gns_status;
  long gns_samples = 0;
  std::string base_poly;  // the random hyperbolic instance
  std::vector<SweepResult> s_results;
};

struct ConverseRecord {
  std::vector<std::string> sequence;
  std::string status;
  long samples = 0;
  std::optional<WitnessBlock> witness;
  // set when NotHyperbolic: the pure-power counterexample at s = 1
  // reproduces the witness failure exactly
  std::optional<bool> counterexample_reproduced;
};

struct SymbolRecord {
  std::vector<Rational> v;
  bool ok = false;
};

struct TrialRecord {
  int index = 0;
  int m = 0;
  int n = 0;
  ForwardRecord forward;
  ConverseRecord converse;
  SymbolRecord symbol;
  bool hard_failure = false;
};

struct CampaignSummary {
  int trials = 0;
  int forward_failures = 0;
  int converse_not_hyperbolic = 0;  // expected outcome, not a failure
  int converse_recheck_failures = 0;
  int symbol_failures = 0;
  int hard_failures = 0;
};

struct CampaignReport {
  int schema_version = 1;
  CampaignConfig config;
  std::vector<TrialRecord> trials;
  CampaignSummary summary;
};

// Per trial: (i) FORWARD - a word-derived sequence must test hyperbolic,
// and applying it to a random hyperbolic polynomial must stay hyperbolic
// across the whole s sweep; (ii) CONVERSE - a random sequence is tested,
// and any NotHyperbolic verdict must be reproduced by the explicit
// pure-power counterexample; (iii) SYMBOL - the bivariate symbol identity
// must hold at a random restriction point. Forward or symbol failures are
// hard failures. Deterministic for a fixed config.
CampaignReport verify_theorem_campaign(const CampaignConfig& cfg);

// Schema-stable JSON with exact rationals serialized as "p/q" strings;
// byte-identical for identical configs.
std::string render_report(const CampaignReport& r);
CampaignReport parse_report(const std::string& json_text);

struct RecheckOutcome {
  int witnesses = 0;
  int failures = 0;
  std::vector<std::string> lines;
};

// Re-verifies every witness block found anywhere in a JSON document:
// the embedded restriction must match a fresh line restriction exactly
// and must not be real-rooted.
RecheckOutcome recheck_report(const std::string& json_text);

}  // namespace hyp

#endif
