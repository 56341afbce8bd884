#pragma once

#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <sys/types.h>

#include "mill/lang.hpp"

namespace mill {

// Sentence-level MT hook. The NMT system itself lives outside this toolkit;
// anything that maps a sentence to its translation can be plugged in here.
// translate() returns nullopt when a sentence cannot be translated (callers
// skip it and count a warning); hard faults throw.
class Translator {
 public:
  virtual ~Translator() = default;
  virtual std::optional<std::string> translate(const std::string& sentence,
                                               Lang src, Lang tgt) = 0;
  // Whether translate() may be called from several threads at once.
  virtual bool concurrent_safe() const = 0;
};

class IdentityTranslator : public Translator {
 public:
  std::optional<std::string> translate(const std::string& sentence, Lang,
                                       Lang) override {
    return sentence;
  }
  bool concurrent_safe() const override { return true; }
};

// Exact-match lookup over a two-column TSV (source, translation); both the
// table and the queries are whitespace-normalized before matching.
class TableTranslator : public Translator {
 public:
  explicit TableTranslator(const std::filesystem::path& path);
  std::optional<std::string> translate(const std::string& sentence, Lang,
                                       Lang) override;
  bool concurrent_safe() const override { return true; }
  size_t size() const { return table_.size(); }

 private:
  std::map<std::string, std::string> table_;
};

// Line protocol against a child process: one sentence per line on stdin,
// one translation per line on stdout, order preserving, flushed per line.
// Newlines inside a sentence travel escaped as \n (backslash doubled).
// Calls are serialized; the child speaks one stream.
class ExecTranslator : public Translator {
 public:
  explicit ExecTranslator(const std::string& command);
  ~ExecTranslator() override;
  std::optional<std::string> translate(const std::string& sentence, Lang,
                                       Lang) override;
  bool concurrent_safe() const override { return false; }

 private:
  std::mutex mutex_;
  pid_t pid_ = -1;
  FILE* to_child_ = nullptr;
  FILE* from_child_ = nullptr;
};

// Builds from a spec string: `identity`, `table:PATH` or `exec:COMMAND`.
std::unique_ptr<Translator> make_translator(const std::string& spec);

}  // namespace mill
