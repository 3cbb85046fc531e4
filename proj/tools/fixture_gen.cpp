// Writes the synthetic fixture corpus (or a bulk corpus) as JSONL.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "synth/synth.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Synthetic VoC corpus generator"};
  std::uint64_t seed = synth::kFixtureSeed;
  std::size_t bulk = 0;
  std::string out_path, topics_path;
  app.add_option("--seed", seed);
  app.add_option("--bulk", bulk, "Generate this many mixed-topic artifacts instead of the fixture");
  app.add_option("-o,--out", out_path);
  app.add_option("--topics", topics_path, "Also write the planted topic of each record, one per line");
  CLI11_PARSE(app, argc, argv);

  const auto records = bulk > 0 ? synth::bulk_records(bulk, seed) : synth::fixture_records(seed);
  const std::string jsonl = synth::to_jsonl(records);
  if (!topics_path.empty()) {
    std::ofstream topics(topics_path, std::ios::trunc);
    for (const auto& r : records) topics << r.topic << '\n';
  }
  if (out_path.empty()) {
    std::cout << jsonl;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  out << jsonl;
  if (!out) {
    std::cerr << "fixture_gen: cannot write " << out_path << '\n';
    return 1;
  }
  return 0;
}
