#include "mcq/selftest.hpp"

#include "mcq/generator.hpp"
#include "mcq/io.hpp"

namespace mcq {

std::string run_selftest(std::uint64_t seed, int quotient_pairs, int non_quotient_pairs,
                         int n, Int scale, const Caps& caps) {
  Json per_method = Json::object();
  for (int m = 1; m <= 10; ++m)
    per_method[std::to_string(m)] = Json{{"true", 0}, {"false", 0}, {"skipped", 0}};
  int disagreements = 0;
  int label_mismatches = 0;

  auto absorb = [&](const QuotientReport& report, bool expected) {
    for (const auto& [id, res] : report.verdicts) {
      Json& slot = per_method[std::to_string(id)];
      const char* key = res.verdict == Verdict::true_    ? "true"
                        : res.verdict == Verdict::false_ ? "false"
                                                         : "skipped";
      slot[key] = slot[key].get<int>() + 1;
    }
    if (!report.all_agree()) ++disagreements;
    auto common = report.common_verdict();
    if (common && *common != expected) ++label_mismatches;
  };

  Rng rng(seed);
  for (int i = 0; i < quotient_pairs; ++i) {
    auto [p, q] = gen_quotient_pair(rng.next(), n, scale);
    absorb(quotient_suite(p, q, caps), true);
  }
  for (int i = 0; i < non_quotient_pairs; ++i) {
    auto [p, q] = gen_non_quotient_pair(rng.next(), n, scale);
    absorb(quotient_suite(p, q, caps), false);
  }

  Json out{{"schema", kSchemaVersion},
           {"seed", seed},
           {"ground_size", n},
           {"scale", scale},
           {"quotient_pairs", quotient_pairs},
           {"non_quotient_pairs", non_quotient_pairs},
           {"verdict_counts", std::move(per_method)},
           {"disagreements", disagreements},
           {"label_mismatches", label_mismatches},
           {"ok", disagreements == 0 && label_mismatches == 0}};
  return canonical_dump(out);
}

}  // namespace mcq
