#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "projbar/barcode.hpp"

namespace projbar {

// |x - y| under the matching conventions: two equal-sign infinities are 0
// apart, an infinity and a finite endpoint are infinitely far.
double endpoint_diff(double x, double y);

// max of the birth and death endpoint differences.
double pair_cost(const Bar& a, const Bar& b);

// (death - birth)/2; infinite for bars with an infinite endpoint.
double unmatched_cost(const Bar& a);

enum class ActiveEndpoint { Birth, Death };

struct MatchedPair {
	int degree;
	Bar left, right;
	double cost;
};

struct UnmatchedTerm {
	int degree;
	bool left_side;
	Bar bar;
	double cost;
};

// The term of the optimal matching that attains the bottleneck value;
// carries everything the subgradient needs.
struct ActiveTerm {
	int degree = 0;
	double cost = 0.0;
	bool matched = false;
	Bar left, right;                              // right meaningful when matched
	bool left_side = true;                        // side of an unmatched term
	ActiveEndpoint endpoint = ActiveEndpoint::Birth;  // attaining endpoint when matched
};

struct MatchWitness {
	double epsilon = 0.0;
	std::vector<MatchedPair> matched;
	std::vector<UnmatchedTerm> unmatched;
	std::optional<ActiveTerm> active;
};

// Degree-by-degree epsilon-matching test; fills the witness on success when
// requested. Negative eps is rejected.
bool epsilon_matching_exists(const GradedBarcode& b1, const GradedBarcode& b2, double eps,
                             MatchWitness* witness = nullptr);

struct BottleneckResult {
	double value = 0.0;  // +inf when no finite matching exists
	MatchWitness witness;
};

// Graded bottleneck distance: max over degrees (restricted to the window) of
// the per-degree optimum, computed exactly over the candidate set of endpoint
// cross-differences and half-lengths. The witness realizes the optimum and
// its active term is tie-broken lexicographically by
// (degree, birth, death, matched-before-unmatched, left-before-right).
BottleneckResult bottleneck(const GradedBarcode& b1, const GradedBarcode& b2,
                            int degree_lo = INT_MIN, int degree_hi = INT_MAX);

// 1-D convolution distance between graded barcodes: the graded bottleneck
// value. Zero exactly when the barcodes agree as multisets.
double convolution_distance_1d(const GradedBarcode& b1, const GradedBarcode& b2);

// Witness serialization (matched pairs, unmatched bars, active term, eps).
std::string witness_to_json(const MatchWitness& witness);

}  // namespace projbar
