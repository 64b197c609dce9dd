/*
 * Copyright 2026 the netconfmodel authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Benchmarks batch extraction: the parallel extract_multi against the
// serial reference loop, over the fixture corpus replicated N times.
// Usage: ncm_bench [fixtures-dir] [replications]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "ncm/extractor.hpp"
#include "ncm/fixtures.hpp"
#include "ncm/model.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double run_ms(std::vector<ncm::MultiResult> (*fn)(const std::vector<ncm::MultiInput>&,
                                                  const ncm::Metamodel&),
              const std::vector<ncm::MultiInput>& inputs,
              std::vector<ncm::MultiResult>& out) {
  auto start = Clock::now();
  out = fn(inputs, ncm::builtin_metamodel());
  auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::string root = argc > 1 ? argv[1] : "fixtures";
  int reps = argc > 2 ? std::atoi(argv[2]) : 50;
  if (reps < 1) reps = 1;

  std::vector<ncm::MultiInput> inputs;
  try {
    for (const auto& fixture : ncm::corpus(root)) {
      if (fixture.negative) continue;
      inputs.push_back({fixture.config_path, fixture.vendor});
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  if (inputs.empty()) {
    std::cerr << "no positive fixtures under " << root << '\n';
    return 2;
  }

  std::vector<ncm::MultiInput> workload;
  workload.reserve(inputs.size() * static_cast<std::size_t>(reps));
  for (int i = 0; i < reps; ++i)
    workload.insert(workload.end(), inputs.begin(), inputs.end());

  std::vector<ncm::MultiResult> serial, parallel;
  double serial_ms = run_ms(ncm::extract_multi_serial, workload, serial);
  double parallel_ms = run_ms(ncm::extract_multi, workload, parallel);

  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i) {
    identical = serial[i].error == parallel[i].error &&
                serial[i].device_name == parallel[i].device_name &&
                ncm::serialize_model(serial[i].model) ==
                    ncm::serialize_model(parallel[i].model);
  }

  std::cout << "files per pass: " << inputs.size() << ", passes: " << reps
            << ", total extractions: " << workload.size() << '\n';
  std::cout << "serial:   " << serial_ms << " ms\n";
  std::cout << "parallel: " << parallel_ms << " ms\n";
  if (parallel_ms > 0.0)
    std::cout << "speedup:  " << serial_ms / parallel_ms << "x\n";
  std::cout << "results:  " << (identical ? "identical" : "DIFFERENT") << '\n';
  return identical ? 0 : 1;
}
