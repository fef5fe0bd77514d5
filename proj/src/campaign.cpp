#include <hyp/campaign.hpp>
#include <hyp/parse.hpp>

#include <json.hpp>

#include <stdexcept>

namespace hyp {

namespace {

using nlohmann::json;

json rationals_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::vector<Rational> rationals_from_json(const json& a) {
  std::vector<Rational> v;
  for (const auto& x : a) v.push_back(Rational::from_string(x.get<std::string>()));
  return v;
}

json witness_to_json(const WitnessBlock& w) {
  return json{{"poly", w.poly},
              {"n", w.nvars},
              {"direction", rationals_to_json(w.direction)},
              {"base", rationals_to_json(w.base)},
              {"restriction", rationals_to_json(w.restriction)}};
}

WitnessBlock witness_from_json(const json& j) {
  WitnessBlock w;
  w.poly = j.at("poly").get<std::string>();
  w.nvars = j.at("n").get<int>();
  w.direction = rationals_from_json(j.at("direction"));
  w.base = rationals_from_json(j.at("base"));
  w.restriction = rationals_from_json(j.at("restriction"));
  return w;
}

json trial_to_json(const TrialRecord& t) {
  json fwd{{"word", t.forward.word},
           {"sequence", t.forward.sequence},
           {"gns_status", t.forward.gns_status},
           {"gns_samples", t.forward.gns_samples},
           {"base_poly", t.forward.base_poly}};
  json sres = json::array();
  for (const auto& r : t.forward.s_results)
    sres.push_back(json{{"s", r.s.str()}, {"status", r.status}, {"samples", r.samples}});
  fwd["s_results"] = sres;

  json conv{{"sequence", t.converse.sequence},
            {"status", t.converse.status},
            {"samples", t.converse.samples}};
  if (t.converse.witness) conv["witness"] = witness_to_json(*t.converse.witness);
  if (t.converse.counterexample_reproduced)
    conv["counterexample_reproduced"] = *t.converse.counterexample_reproduced;

  json sym{{"v", rationals_to_json(t.symbol.v)}, {"ok", t.symbol.ok}};

  return json{{"index", t.index},   {"m", t.m},           {"n", t.n},
              {"forward", fwd},     {"converse", conv},   {"symbol", sym},
              {"hard_failure", t.hard_failure}};
}

TrialRecord trial_from_json(const json& j) {
  TrialRecord t;
  t.index = j.at("index").get<int>();
  t.m = j.at("m").get<int>();
  t.n = j.at("n").get<int>();
  const json& fwd = j.at("forward");
  t.forward.word = fwd.at("word").get<std::vector<std::string>>();
  t.forward.sequence = fwd.at("sequence").get<std::vector<std::string>>();
  t.forward.gns_status = fwd.at("gns_status").get<std::string>();
  t.forward.gns_samples = fwd.at("gns_samples").get<long>();
  t.forward.base_poly = fwd.at("base_poly").get<std::string>();
  for (const auto& r : fwd.at("s_results"))
    t.forward.s_results.push_back(SweepResult{Rational::from_string(r.at("s").get<std::string>()),
                                              r.at("status").get<std::string>(),
                                              r.at("samples").get<long>()});
  const json& conv = j.at("converse");
  t.converse.sequence = conv.at("sequence").get<std::vector<std::string>>();
  t.converse.status = conv.at("status").get<std::string>();
  t.converse.samples = conv.at("samples").get<long>();
  if (conv.contains("witness")) t.converse.witness = witness_from_json(conv.at("witness"));
  if (conv.contains("counterexample_reproduced"))
    t.converse.counterexample_reproduced = conv.at("counterexample_reproduced").get<bool>();
  const json& sym = j.at("symbol");
  t.symbol.v = rationals_from_json(sym.at("v"));
  t.symbol.ok = sym.at("ok").get<bool>();
  t.hard_failure = j.at("hard_failure").get<bool>();
  return t;
}

json config_to_json(const CampaignConfig& c) {
  json sweep = json::array();
  for (const auto& s : c.s_values) sweep.push_back(s.str());
  return json{{"trials", c.trials},
              {"m_max", c.m_max},
              {"n_max", c.n_max},
              {"s_sweep", sweep},
              {"seed", c.seed},
              {"sampling", json{{"sample_count", c.sampling.sample_count},
                                {"coordinate_bound", c.sampling.coordinate_bound},
                                {"include_grid", c.sampling.include_grid}}}};
}

CampaignConfig config_from_json(const json& j) {
  CampaignConfig c;
  c.trials = j.at("trials").get<int>();
  c.m_max = j.at("m_max").get<int>();
  c.n_max = j.at("n_max").get<int>();
  c.s_values.clear();
  for (const auto& s : j.at("s_sweep")) c.s_values.push_back(Rational::from_string(s.get<std::string>()));
  c.seed = j.at("seed").get<std::uint64_t>();
  const json& smp = j.at("sampling");
  c.sampling.sample_count = smp.at("sample_count").get<int>();
  c.sampling.coordinate_bound = smp.at("coordinate_bound").get<int>();
  c.sampling.include_grid = smp.at("include_grid").get<bool>();
  return c;
}

json summary_to_json(const CampaignSummary& s) {
  return json{{"trials", s.trials},
              {"forward_failures", s.forward_failures},
              {"converse_not_hyperbolic", s.converse_not_hyperbolic},
              {"converse_recheck_failures", s.converse_recheck_failures},
              {"symbol_failures", s.symbol_failures},
              {"hard_failures", s.hard_failures}};
}

CampaignSummary summary_from_json(const json& j) {
  CampaignSummary s;
  s.trials = j.at("trials").get<int>();
  s.forward_failures = j.at("forward_failures").get<int>();
  s.converse_not_hyperbolic = j.at("converse_not_hyperbolic").get<int>();
  s.converse_recheck_failures = j.at("converse_recheck_failures").get<int>();
  s.symbol_failures = j.at("symbol_failures").get<int>();
  s.hard_failures = j.at("hard_failures").get<int>();
  return s;
}

std::vector<std::string> render_sequence(const CoeffSequence& a) {
  std::vector<std::string> out;
  out.reserve(a.entries().size());
  for (const auto& e : a.entries()) out.push_back(render(e));
  return out;
}

std::vector<Rational> unit_direction(int n) {
  std::vector<Rational> e(static_cast<std::size_t>(n), Rational(0));
  e.back() = 1;
  return e;
}

}  // namespace

std::vector<Rational> CampaignConfig::default_s_sweep() {
  return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1), Rational(2)};
}

WitnessBlock make_witness_block(const MultiPoly& p, std::span<const Rational> e, const Witness& w) {
  WitnessBlock blk;
  blk.poly = render(p);
  blk.nvars = p.nvars();
  blk.direction.assign(e.begin(), e.end());
  blk.base = w.base;
  blk.restriction = w.restriction.coeffs();
  return blk;
}

CampaignReport verify_theorem_campaign(const CampaignConfig& cfg) {
  if (cfg.trials < 0) throw std::invalid_argument("campaign: negative trial count");
  if (cfg.m_max < 1 || cfg.n_max < 2) throw std::invalid_argument("campaign: need m_max >= 1, n_max >= 2");
  if (cfg.s_values.empty()) throw std::invalid_argument("campaign: empty s sweep");
  if (cfg.s_values.size() > 1000) throw std::invalid_argument("campaign: s sweep too long");

  CampaignReport report;
  report.config = cfg;
  report.summary.trials = cfg.trials;

  for (int t = 0; t < cfg.trials; ++t) {
    auto stream = [&](std::uint64_t offset) {
      return Rng::derive(cfg.seed, static_cast<std::uint64_t>(t) * 1024 + offset);
    };
    TrialRecord rec;
    rec.index = t;
    Rng shape(stream(0));
    rec.m = static_cast<int>(shape.uniform(1, cfg.m_max));
    rec.n = static_cast<int>(shape.uniform(2, cfg.n_max));
    const auto e = unit_direction(rec.n);

    // FORWARD: word-derived sequences are hyperbolicity preserving
    OperatorWord word = random_word(rec.m, rec.n, stream(1));
    for (int k : word.letters()) rec.forward.word.push_back(var_name(k, rec.n - 1));
    CoeffSequence wa = expand_word(word);
    rec.forward.sequence = render_sequence(wa);
    SamplingConfig scfg = cfg.sampling;
    scfg.seed = stream(2);
    HyperbolicityVerdict gns = check_sequence(wa, scfg);
    rec.forward.gns_status = to_string(gns.status);
    rec.forward.gns_samples = gns.samples_checked;
    bool forward_bad = gns.status != HypStatus::ProbablyHyperbolic;

    MultiPoly base = random_hyperbolic(rec.m, rec.n, stream(3));
    rec.forward.base_poly = render(base);
    for (std::size_t i = 0; i < cfg.s_values.size(); ++i) {
      MultiPoly shifted = apply_sequence(base, wa, cfg.s_values[i]);
      SamplingConfig scfg_s = cfg.sampling;
      scfg_s.seed = stream(16 + i);
      HyperbolicityVerdict v = test_hyperbolic(shifted, e, scfg_s);
      rec.forward.s_results.push_back(SweepResult{cfg.s_values[i], to_string(v.status), v.samples_checked});
      forward_bad |= v.status == HypStatus::NotHyperbolic;
    }
    if (forward_bad) ++report.summary.forward_failures;

    // CONVERSE: random sequences; failures must carry reproducible witnesses
    CoeffSequence ca = random_coeff_sequence(rec.m, rec.n, stream(4));
    rec.converse.sequence = render_sequence(ca);
    SamplingConfig ccfg = cfg.sampling;
    ccfg.seed = stream(5);
    HyperbolicityVerdict cv = check_sequence(ca, ccfg);
    rec.converse.status = to_string(cv.status);
    rec.converse.samples = cv.samples_checked;
    bool converse_bad = false;
    if (cv.status == HypStatus::NotHyperbolic) {
      ++report.summary.converse_not_hyperbolic;
      MultiPoly q = sequence_test_poly(ca);
      rec.converse.witness = make_witness_block(q, e, *cv.witness);
      // the pure power x_n^m at s = 1 is the explicit counterexample:
      // applying the sequence to it gives exactly the test polynomial
      MultiPoly pure = MultiPoly::monomial(Monomial::var(rec.n, rec.n - 1, rec.m), 1);
      UniPoly r = restrict_line(apply_sequence(pure, ca, 1), cv.witness->base, e);
      bool reproduced = (r == cv.witness->restriction) && !is_real_rooted(r);
      rec.converse.counterexample_reproduced = reproduced;
      if (!reproduced) {
        ++report.summary.converse_recheck_failures;
        converse_bad = true;
      }
    }

    // SYMBOL: the two symbol routes agree at a random restriction point
    Rng vr(stream(6));
    std::vector<Rational> v;
    for (int i = 0; i < rec.n - 1; ++i) v.emplace_back(static_cast<long>(vr.uniform(-5, 5)));
    rec.symbol.v = v;
    rec.symbol.ok = verify_symbol_identity(restrict_sequence(ca, v, 1), rec.m).equal;
    if (!rec.symbol.ok) ++report.summary.symbol_failures;

    rec.hard_failure = forward_bad || converse_bad || !rec.symbol.ok;
    if (rec.hard_failure) ++report.summary.hard_failures;
    report.trials.push_back(std::move(rec));
  }
  return report;
}

std::string render_report(const CampaignReport& r) {
  json trials = json::array();
  for (const auto& t : r.trials) trials.push_back(trial_to_json(t));
  json doc{{"schema_version", r.schema_version},
           {"config", config_to_json(r.config)},
           {"trials", trials},
           {"summary", summary_to_json(r.summary)}};
  return doc.dump(2) + "\n";
}

CampaignReport parse_report(const std::string& json_text) {
  json doc = json::parse(json_text);
  CampaignReport r;
  r.schema_version = doc.at("schema_version").get<int>();
  r.config = config_from_json(doc.at("config"));
  for (const auto& t : doc.at("trials")) r.trials.push_back(trial_from_json(t));
  r.summary = summary_from_json(doc.at("summary"));
  return r;
}

namespace {

bool looks_like_witness(const json& j) {
  return j.is_object() && j.contains("poly") && j.contains("n") && j.contains("direction") &&
         j.contains("base") && j.contains("restriction");
}

void collect_witnesses(const json& j, std::vector<WitnessBlock>& out) {
  if (looks_like_witness(j)) {
    out.push_back(witness_from_json(j));
    return;
  }
  if (j.is_object() || j.is_array())
    for (const auto& child : j) collect_witnesses(child, out);
}

}  // namespace

RecheckOutcome recheck_report(const std::string& json_text) {
  RecheckOutcome outcome;
  std::vector<WitnessBlock> witnesses;
  collect_witnesses(json::parse(json_text), witnesses);
  for (const auto& w : witnesses) {
    ++outcome.witnesses;
    std::string label = "witness " + std::to_string(outcome.witnesses);
    try {
      MultiPoly p = parse_poly(w.poly, w.nvars);
      if (static_cast<int>(w.direction.size()) != w.nvars || static_cast<int>(w.base.size()) != w.nvars)
        throw std::invalid_argument("vector length mismatch");
      UniPoly r = restrict_line(p, w.base, w.direction);
      if (r.coeffs() != w.restriction) {
        ++outcome.failures;
        outcome.lines.push_back(label + ": FAILED (stored restriction does not match recomputation)");
      } else if (is_real_rooted(r)) {
        ++outcome.failures;
        outcome.lines.push_back(label + ": FAILED (restriction is real-rooted; no counterexample)");
      } else {
        outcome.lines.push_back(label + ": ok (restriction matches and is not real-rooted)");
      }
    } catch (const std::exception& e) {
      ++outcome.failures;
      outcome.lines.push_back(label + ": FAILED (" + e.what() + ")");
    }
  }
  return outcome;
}

}  // namespace hyp
