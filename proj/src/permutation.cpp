#include "kusub/permutation.hpp"

#include <numeric>

#include "kusub/error.hpp"

namespace kusub {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MixedDegree: return "MixedDegree";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotASubgroup: return "NotASubgroup";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::PrimeDoesNotDivide: return "PrimeDoesNotDivide";
    case ErrorCode::BadOrdering: return "BadOrdering";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::Malformed: return "Malformed";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x >= images.size() || seen[x]) {
      throw Error(ErrorCode::NotABijection, "image list is not a permutation");
    }
    seen[x] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const& cycles) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (auto const& cycle : cycles) {
    for (Point x : cycle) {
      if (x < 1 || x > degree) {
        throw Error(ErrorCode::DegreeMismatch,
                    "point " + std::to_string(x) + " outside 1.." + std::to_string(degree));
      }
      if (used[x - 1]) {
        throw Error(ErrorCode::NotABijection,
                    "point " + std::to_string(x) + " repeated in cycle notation");
      }
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::operator*(Permutation const& rhs) const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = rhs.images_[images_[i]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Point> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(out));
}

Permutation Permutation::conjugate_by(Permutation const& x) const {
  return x.inverse() * *this * x;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (Point x = static_cast<Point>(i); !seen[x]; x = images_[x]) {
      seen[x] = true;
      if (!first) out += ' ';
      out += std::to_string(x + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t PermutationHash::operator()(Permutation const& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace kusub
