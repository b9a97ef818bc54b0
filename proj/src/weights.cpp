#include "weights.hpp"

#include <algorithm>
#include <numeric>

namespace toss {

int WeightData::period() const {
  int p = 1;
  for (int w : weights) p = std::lcm(p, w);
  return p;
}

std::string WeightData::label() const {
  switch (type) {
    case EuclideanType::A:
      return "A(" + std::to_string(weights[0]) + "," + std::to_string(weights[1]) + ")";
    case EuclideanType::D:
      return "D(" + std::to_string(affine_n) + ")";
    default:
      return "E(" + std::to_string(affine_n) + ")";
  }
}

WeightData classify_weights(const std::vector<int>& ws) {
  for (int w : ws)
    if (w < 1) throw toss_error("weights must be positive integers");
  std::vector<int> big;
  for (int w : ws)
    if (w > 1) big.push_back(w);

  // tameness: sum 1/w_i > l - 2, invariant under dropping weight-1 branches
  {
    long long num = 0, den = 1;
    for (int w : big) den *= w;
    for (int w : big) num += den / w;
    long long rhs = (long long)((int)big.size() - 2) * den;
    if (num <= rhs) {
      std::string s;
      for (size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + std::to_string(ws[i]);
      throw not_tame_error("weight tuple (" + s + ") is not tame");
    }
  }

  WeightData out;
  if (big.size() <= 2) {
    int p = big.size() > 0 ? big[0] : 1;
    int q = big.size() > 1 ? big[1] : 1;
    out.type = EuclideanType::A;
    out.weights = {p, q};
    out.affine_n = p + q - 1;
  } else {
    std::sort(big.begin(), big.end());
    if (big[0] == 2 && big[1] == 2) {
      out.type = EuclideanType::D;
      out.weights = big;
      out.affine_n = big[2] + 2;
    } else if (big[0] == 2 && big[1] == 3 && big[2] >= 3 && big[2] <= 5) {
      out.type = EuclideanType::E;
      out.weights = big;
      out.affine_n = big[2] + 3;
    } else {
      throw internal_error("tame 3-branch tuple escaped classification");
    }
  }
  out.rank = 2;
  for (int w : out.weights) out.rank += w - 1;
  return out;
}

WeightData weights_from_tag(const std::string& tag) {
  if (tag.empty()) throw parse_error("empty type tag");
  char kind = (char)std::toupper(tag[0]);
  std::string rest = tag.substr(1);
  // strip optional punctuation: "A(3,2)" / "A3,2" / "A3x2"
  std::vector<int> nums;
  std::string cur;
  for (char c : rest) {
    if (std::isdigit((unsigned char)c)) {
      cur += c;
    } else if (c == ',' || c == 'x' || c == '(' || c == ')' || c == ' ') {
      if (!cur.empty()) {
        nums.push_back(std::stoi(cur));
        cur.clear();
      }
    } else {
      throw parse_error("bad type tag: " + tag);
    }
  }
  if (!cur.empty()) {
    if (kind == 'A' && nums.empty() && cur.size() > 1 && cur.find(',') == std::string::npos) {
      // "A32" means p=3, q=2 (single digits)
      for (char c : cur) nums.push_back(c - '0');
    } else {
      nums.push_back(std::stoi(cur));
    }
  }
  if (kind == 'A') {
    if (nums.size() != 2) throw parse_error("type tag A needs two weights, e.g. A32 or A3,2");
    return classify_weights({nums[0], nums[1]});
  }
  if (nums.size() != 1) throw parse_error("type tag " + std::string(1, kind) + " needs one number");
  int n = nums[0];
  if (kind == 'D') {
    if (n < 4) throw parse_error("type D needs n >= 4");
    return classify_weights({2, 2, n - 2});
  }
  if (kind == 'E') {
    if (n < 6 || n > 8) throw parse_error("type E needs n in {6,7,8}");
    return classify_weights({2, 3, n - 3});
  }
  throw parse_error("unknown type tag kind: " + std::string(1, kind));
}

}  // namespace toss
