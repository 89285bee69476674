// Replays every corpus/*.json invocation and compares exit code and stdout.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "../tools/cli.hpp"

namespace fs = std::filesystem;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: golden CORPUS_DIR\n";
    return 2;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(argv[1])) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no golden files in " << argv[1] << "\n";
    return 1;
  }

  int failures = 0;
  for (const auto& file : files) {
    std::ifstream in(file);
    const auto golden = nlohmann::json::parse(in);
    std::ostringstream out;
    std::ostringstream err;
    const int code = wci::cli::run(golden.at("argv").get<std::vector<std::string>>(), out, err);
    const bool ok = code == golden.at("exit_code").get<int>() && out.str() == golden.at("stdout").get<std::string>();
    std::cout << (ok ? "PASS " : "FAIL ") << file.stem().string() << "\n";
    if (!ok) {
      ++failures;
      std::cout << "  exit " << code << ", expected " << golden.at("exit_code") << "\n";
      std::cout << "  stdout:\n" << out.str() << "  stderr:\n" << err.str();
    }
  }
  return failures == 0 ? 0 : 1;
}
