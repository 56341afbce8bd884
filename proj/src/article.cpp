#include "mill/article.hpp"

#include <charconv>
#include <cstdio>

namespace mill {

namespace {

std::chrono::year_month_day to_ymd(const Date& d) {
  return std::chrono::year{d.year} / static_cast<int>(d.month) /
         static_cast<int>(d.day);
}

}  // namespace

bool Date::valid() const { return to_ymd(*this).ok(); }

long Date::serial() const {
  return std::chrono::sys_days(to_ymd(*this)).time_since_epoch().count();
}

std::string Date::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
  return buf;
}

Date Date::parse(std::string_view iso) {
  auto fail = [&]() -> Date {
    throw DataError("unparseable date: " + std::string(iso));
  };
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return fail();
  auto num = [&](size_t pos, size_t len, int& value) {
    auto [ptr, ec] =
        std::from_chars(iso.data() + pos, iso.data() + pos + len, value);
    return ec == std::errc{} && ptr == iso.data() + pos + len;
  };
  int y = 0, m = 0, d = 0;
  if (!num(0, 4, y) || !num(5, 2, m) || !num(8, 2, d)) return fail();
  Date date{y, static_cast<unsigned>(m), static_cast<unsigned>(d)};
  if (!date.valid()) return fail();
  return date;
}

void ArticleCollection::add(Article article) {
  if (article.id.empty()) throw DataError("article with empty id");
  if (by_id_.count(article.id))
    throw DataError("duplicate article id: " + article.id);
  std::string id = article.id;
  by_id_.emplace(std::move(id), std::move(article));
}

const Article* ArticleCollection::find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &it->second;
}

std::vector<const Article*> ArticleCollection::by_lang(Lang lang) const {
  std::vector<const Article*> out;
  for (const auto& [id, a] : by_id_)
    if (a.lang == lang) out.push_back(&a);
  return out;
}

std::vector<const Article*> ArticleCollection::by_date(const Date& date) const {
  std::vector<const Article*> out;
  for (const auto& [id, a] : by_id_)
    if (a.date == date) out.push_back(&a);
  return out;
}

}  // namespace mill
