#include "mill/translator.hpp"

#include <csignal>
#include <sys/wait.h>
#include <unistd.h>

#include <fstream>

#include "mill/utf8.hpp"

namespace mill {

namespace {

std::string normalize_ws(std::string_view text) {
  std::string out;
  bool pending = false;
  for (char32_t cp : utf8::decode(text)) {
    if (utf8::is_space(cp)) {
      pending = !out.empty();
      continue;
    }
    if (pending) out.push_back(' ');
    pending = false;
    utf8::append(out, cp);
  }
  return out;
}

std::string escape_line(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '\\')
      out += "\\\\";
    else if (c == '\n')
      out += "\\n";
    else
      out.push_back(c);
  }
  return out;
}

std::string unescape_line(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      char n = s[++i];
      out.push_back(n == 'n' ? '\n' : n);
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

}  // namespace

TableTranslator::TableTranslator(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read translation table: " + path.string());
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos)
      throw DataError("translation table " + path.string() + ":" +
                      std::to_string(lineno) + ": missing tab");
    table_[normalize_ws(line.substr(0, tab))] = line.substr(tab + 1);
  }
}

std::optional<std::string> TableTranslator::translate(
    const std::string& sentence, Lang, Lang) {
  auto it = table_.find(normalize_ws(sentence));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

ExecTranslator::ExecTranslator(const std::string& command) {
  // A dying child must surface as an error, not kill us via SIGPIPE.
  std::signal(SIGPIPE, SIG_IGN);
  int to_pipe[2], from_pipe[2];
  if (pipe(to_pipe) != 0 || pipe(from_pipe) != 0)
    throw DataError("exec translator: pipe failed");
  pid_ = fork();
  if (pid_ < 0) throw DataError("exec translator: fork failed");
  if (pid_ == 0) {
    dup2(to_pipe[0], STDIN_FILENO);
    dup2(from_pipe[1], STDOUT_FILENO);
    close(to_pipe[0]);
    close(to_pipe[1]);
    close(from_pipe[0]);
    close(from_pipe[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(to_pipe[0]);
  close(from_pipe[1]);
  to_child_ = fdopen(to_pipe[1], "w");
  from_child_ = fdopen(from_pipe[0], "r");
  if (!to_child_ || !from_child_)
    throw DataError("exec translator: fdopen failed");
}

ExecTranslator::~ExecTranslator() {
  if (to_child_) fclose(to_child_);
  if (from_child_) fclose(from_child_);
  if (pid_ > 0) waitpid(pid_, nullptr, 0);
}

std::optional<std::string> ExecTranslator::translate(const std::string& sentence,
                                                     Lang, Lang) {
  std::lock_guard<std::mutex> lock(mutex_);
  std::string line = escape_line(sentence);
  if (fputs(line.c_str(), to_child_) == EOF || fputc('\n', to_child_) == EOF ||
      fflush(to_child_) != 0)
    throw DataError("exec translator: child stopped accepting input");
  std::string reply;
  int c;
  while ((c = fgetc(from_child_)) != EOF && c != '\n')
    reply.push_back(static_cast<char>(c));
  if (c == EOF)
    throw DataError("exec translator: child closed its output mid-stream");
  return unescape_line(reply);
}

std::unique_ptr<Translator> make_translator(const std::string& spec) {
  if (spec == "identity") return std::make_unique<IdentityTranslator>();
  if (spec.rfind("table:", 0) == 0)
    return std::make_unique<TableTranslator>(spec.substr(6));
  if (spec.rfind("exec:", 0) == 0)
    return std::make_unique<ExecTranslator>(spec.substr(5));
  throw DataError("unknown translator spec: " + spec +
                  " (want identity, table:PATH or exec:COMMAND)");
}

}  // namespace mill
