#pragma once

#include <chrono>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mill/lang.hpp"

namespace mill {

// Calendar date, validated against the civil calendar.
struct Date {
  int year = 1970;
  unsigned month = 1;
  unsigned day = 1;

  bool valid() const;
  long serial() const;  // days since 1970-01-01
  std::string to_string() const;
  static Date parse(std::string_view iso);  // strict YYYY-MM-DD

  auto operator<=>(const Date&) const = default;
};

inline long days_between(const Date& a, const Date& b) {
  return b.serial() - a.serial();
}

struct Article {
  std::string id;
  Lang lang = Lang::en;
  Date date;
  std::string title;
  std::string body;

  bool operator==(const Article&) const = default;
};

// Immutable after load; iteration is sorted by id so runs are reproducible.
class ArticleCollection {
 public:
  void add(Article article);  // throws DataError on duplicate id

  const std::map<std::string, Article, std::less<>>& all() const { return by_id_; }
  const Article* find(std::string_view id) const;
  std::vector<const Article*> by_lang(Lang lang) const;
  std::vector<const Article*> by_date(const Date& date) const;
  size_t size() const { return by_id_.size(); }
  bool empty() const { return by_id_.empty(); }

  bool operator==(const ArticleCollection&) const = default;

 private:
  std::map<std::string, Article, std::less<>> by_id_;
};

}  // namespace mill
