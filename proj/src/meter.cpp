#include <algorithm>

#include "fxmpc/transport.hpp"

namespace fx {

CostMeter::CostMeter() = default;

void CostMeter::push(const std::string& label) {
  bool dup = std::any_of(stack_.begin(), stack_.end(),
                         [&](const Scope& s) { return s.counted && s.label == label; });
  stack_.push_back({label, !dup, -1});
  if (!dup) labels_[label];
}

void CostMeter::pop() {
  require(!stack_.empty(), "meter scope underflow");
  stack_.pop_back();
}

namespace {

bool new_round(int& last, Op op) {
  bool r = op == Op::Exchange || last != static_cast<int>(op);
  last = static_cast<int>(op);
  return r;
}

}  // namespace

void CostMeter::record(Op op, u64 sent, u64 received) {
  root_.bits_sent += sent;
  root_.bits_received += received;
  if (new_round(root_last_, op)) root_.rounds++;
  for (auto& s : stack_) {
    if (!s.counted) continue;
    LabelStats& st = labels_[s.label];
    st.bits_sent += sent;
    st.bits_received += received;
    if (new_round(s.last, op)) st.rounds++;
  }
}

void CostMeter::reset() {
  root_ = {};
  root_last_ = -1;
  labels_.clear();
  for (auto& s : stack_) {
    s.last = -1;
    if (s.counted) labels_[s.label];
  }
}

LabelStats CostMeter::label(const std::string& name) const {
  auto it = labels_.find(name);
  return it == labels_.end() ? LabelStats{} : it->second;
}

const std::string& CostMeter::current() const {
  static const std::string none;
  return stack_.empty() ? none : stack_.back().label;
}

}  // namespace fx
