#include "latticelab/order.hpp"

#include <algorithm>
#include <numeric>

#include "latticelab/error.hpp"

namespace latticelab {

namespace {

void check_permutation(const std::vector<std::size_t>& priority) {
  if (priority.size() > Monomial::kMaxVars) throw Error(ErrorKind::RingTooLarge, "too many variables");
  std::vector<bool> seen(priority.size(), false);
  for (auto v : priority) {
    if (v >= priority.size() || seen[v]) throw Error(ErrorKind::BadParameters, "priority is not a permutation");
    seen[v] = true;
  }
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority, std::vector<std::size_t> block)
    : kind_(kind), priority_(std::move(priority)), block_(std::move(block)) {
  for (auto v : priority_) prio8_.push_back(static_cast<std::uint8_t>(v));
  for (auto v : block_) block8_.push_back(static_cast<std::uint8_t>(v));
}

MonomialOrder MonomialOrder::lex(std::vector<std::size_t> priority) {
  check_permutation(priority);
  return MonomialOrder(OrderKind::Lex, std::move(priority), {});
}

MonomialOrder MonomialOrder::degrevlex(std::vector<std::size_t> priority) {
  check_permutation(priority);
  return MonomialOrder(OrderKind::DegRevLex, std::move(priority), {});
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return lex(identity(nvars)); }
MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) { return degrevlex(identity(nvars)); }

MonomialOrder MonomialOrder::elimination(std::vector<std::size_t> block, const MonomialOrder& ambient) {
  for (auto v : block)
    if (v >= ambient.nvars()) throw Error(ErrorKind::BadParameters, "elimination block outside the ring");
  std::vector<std::size_t> merged = ambient.block_;
  for (auto v : block)
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  return MonomialOrder(ambient.kind_, ambient.priority_, std::move(merged));
}

MonomialOrder MonomialOrder::extended(std::size_t extra) const {
  auto prio = priority_;
  for (std::size_t i = 0; i < extra; ++i) prio.push_back(priority_.size() + i);
  if (prio.size() > Monomial::kMaxVars) throw Error(ErrorKind::RingTooLarge, "too many variables");
  return MonomialOrder(kind_, std::move(prio), block_);
}

std::string MonomialOrder::describe(const std::vector<std::string>& names) const {
  auto name = [&](std::size_t v) { return v < names.size() ? names[v] : "v" + std::to_string(v); };
  std::string out;
  if (!block_.empty()) {
    out = "elim(";
    for (std::size_t i = 0; i < block_.size(); ++i) out += (i ? "," : "") + name(block_[i]);
    out += ")+";
  }
  out += kind_ == OrderKind::Lex ? "lex:" : "degrevlex:";
  for (std::size_t i = 0; i < priority_.size(); ++i) out += (i ? "," : "") + name(priority_[i]);
  return out;
}

MonomialOrder parse_order(std::string_view descriptor, const std::vector<std::string>& names) {
  auto colon = descriptor.find(':');
  std::string_view kind = descriptor.substr(0, colon);
  std::string_view list = colon == std::string_view::npos ? std::string_view{} : descriptor.substr(colon + 1);
  std::vector<std::size_t> priority;
  if (list.empty()) {
    priority = identity(names.size());
  } else {
    std::size_t start = 0;
    while (start <= list.size()) {
      auto comma = list.find(',', start);
      auto token = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      auto it = std::find(names.begin(), names.end(), token);
      if (it == names.end())
        throw Error(ErrorKind::ParseError, "unknown variable '" + std::string(token) + "' in order descriptor");
      priority.push_back(static_cast<std::size_t>(it - names.begin()));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (priority.size() != names.size())
      throw Error(ErrorKind::ParseError, "order descriptor must list every variable exactly once");
  }
  try {
    if (kind == "lex") return MonomialOrder::lex(std::move(priority));
    if (kind == "degrevlex" || kind == "revlex" || kind == "grevlex") return MonomialOrder::degrevlex(std::move(priority));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  throw Error(ErrorKind::ParseError, "unknown order kind '" + std::string(kind) + "'");
}

}  // namespace latticelab
