#include "projbar/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace projbar {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double endpoint_diff(double x, double y) {
	if (std::isinf(x) || std::isinf(y)) return x == y ? 0.0 : kInf;
	return std::abs(x - y);
}

double pair_cost(const Bar& a, const Bar& b) {
	return std::max(endpoint_diff(a.birth, b.birth), endpoint_diff(a.death, b.death));
}

double unmatched_cost(const Bar& a) {
	if (std::isinf(a.birth) || std::isinf(a.death)) return kInf;
	return (a.death - a.birth) / 2.0;
}

namespace {

// Hopcroft-Karp maximum matching; adj maps left vertex -> right vertices.
struct Matcher {
	int n_left, n_right;
	const std::vector<std::vector<int>>& adj;
	std::vector<int> pair_left, pair_right, layer;

	Matcher(int nl, int nr, const std::vector<std::vector<int>>& a)
	    : n_left(nl), n_right(nr), adj(a), pair_left(nl, -1), pair_right(nr, -1) {}

	bool bfs() {
		std::queue<int> q;
		layer.assign(n_left, -1);
		for (int l = 0; l < n_left; ++l)
			if (pair_left[l] < 0) { layer[l] = 0; q.push(l); }
		bool reachable = false;
		while (!q.empty()) {
			int l = q.front();
			q.pop();
			for (int r : adj[l]) {
				int next = pair_right[r];
				if (next < 0) {
					reachable = true;
				} else if (layer[next] < 0) {
					layer[next] = layer[l] + 1;
					q.push(next);
				}
			}
		}
		return reachable;
	}

	bool dfs(int l) {
		for (int r : adj[l]) {
			int next = pair_right[r];
			if (next < 0 || (layer[next] == layer[l] + 1 && dfs(next))) {
				pair_left[l] = r;
				pair_right[r] = l;
				return true;
			}
		}
		layer[l] = -1;
		return false;
	}

	int run() {
		int size = 0;
		while (bfs())
			for (int l = 0; l < n_left; ++l)
				if (pair_left[l] < 0 && dfs(l)) ++size;
		return size;
	}
};

// A finite-bar subproblem of one degree: bars with both endpoints finite.
struct FiniteClass {
	std::vector<Bar> left, right;

	bool is_short(const Bar& b, double eps) const { return b.death - b.birth <= 2.0 * eps; }

	// Matching saturating the given side's long bars, as pairs (li, rj);
	// nullopt when impossible. Saturation of left longs and right longs can
	// be checked independently; a matching achieving both at once always
	// exists when each does (alternating-path merge below).
	std::optional<std::vector<std::pair<int, int>>> saturate_longs(bool left_longs,
	                                                               double eps) const {
		const auto& A = left_longs ? left : right;
		const auto& B = left_longs ? right : left;
		std::vector<int> longs;
		for (int i = 0; i < (int)A.size(); ++i)
			if (!is_short(A[i], eps)) longs.push_back(i);
		if (longs.empty()) return std::vector<std::pair<int, int>>{};
		std::vector<std::vector<int>> adj(longs.size());
		for (size_t k = 0; k < longs.size(); ++k)
			for (int j = 0; j < (int)B.size(); ++j)
				if (pair_cost(A[longs[k]], B[j]) <= eps) adj[k].push_back(j);
		Matcher m((int)longs.size(), (int)B.size(), adj);
		if (m.run() != (int)longs.size()) return std::nullopt;
		std::vector<std::pair<int, int>> out;
		for (size_t k = 0; k < longs.size(); ++k) {
			int li = left_longs ? longs[k] : m.pair_left[k];
			int rj = left_longs ? m.pair_left[k] : longs[k];
			out.push_back({li, rj});
		}
		return out;
	}

	bool feasible(double eps) const {
		return saturate_longs(true, eps).has_value() && saturate_longs(false, eps).has_value();
	}

	// Merge the two one-sided matchings into one covering all long bars of
	// both sides: walk the alternating components of their union and keep,
	// per component, the matching that covers the uncovered long right bars.
	std::vector<std::pair<int, int>> matching(double eps) const {
		auto m1 = saturate_longs(true, eps);
		auto m2 = saturate_longs(false, eps);
		if (!m1 || !m2) throw std::logic_error("matching requested at infeasible eps");
		std::vector<int> e1_left(left.size(), -1), e1_right(right.size(), -1);
		std::vector<int> e2_left(left.size(), -1), e2_right(right.size(), -1);
		for (auto [l, r] : *m1) { e1_left[l] = r; e1_right[r] = l; }
		for (auto [l, r] : *m2) { e2_left[l] = r; e2_right[r] = l; }

		std::vector<char> visited_l(left.size(), 0), visited_r(right.size(), 0);
		std::vector<std::pair<int, int>> out;
		for (int seed = 0; seed < (int)right.size(); ++seed) {
			if (visited_r[seed] || (e1_right[seed] < 0 && e2_right[seed] < 0)) continue;
			// collect the component containing right vertex `seed`
			std::vector<int> comp_l, comp_r;
			std::queue<std::pair<int, char>> q;  // (vertex, is_left)
			q.push({seed, 0});
			visited_r[seed] = 1;
			bool need_e2 = false;
			while (!q.empty()) {
				auto [v, is_left] = q.front();
				q.pop();
				if (is_left) {
					comp_l.push_back(v);
					for (int r : {e1_left[v], e2_left[v]})
						if (r >= 0 && !visited_r[r]) { visited_r[r] = 1; q.push({r, 0}); }
				} else {
					comp_r.push_back(v);
					if (e1_right[v] < 0 && !is_short(right[v], eps)) need_e2 = true;
					for (int l : {e1_right[v], e2_right[v]})
						if (l >= 0 && !visited_l[l]) { visited_l[l] = 1; q.push({l, 1}); }
				}
			}
			for (int r : comp_r) {
				int l = need_e2 ? e2_right[r] : e1_right[r];
				if (l >= 0) out.push_back({l, r});
			}
		}
		return out;
	}

	// Candidate thresholds the optimum can take.
	std::vector<double> candidates() const {
		std::vector<double> c = {0.0};
		for (const Bar& a : left)
			for (const Bar& b : right) {
				c.push_back(std::abs(a.birth - b.birth));
				c.push_back(std::abs(a.death - b.death));
			}
		for (const Bar& a : left) c.push_back(unmatched_cost(a));
		for (const Bar& b : right) c.push_back(unmatched_cost(b));
		std::sort(c.begin(), c.end());
		c.erase(std::unique(c.begin(), c.end()), c.end());
		return c;
	}

	double optimum() const {
		auto c = candidates();
		// the largest candidate (max half-length) always admits a matching
		size_t lo = 0, hi = c.size() - 1;
		if (feasible(c[0])) return c[0];
		while (hi - lo > 1) {
			size_t mid = (lo + hi) / 2;
			if (feasible(c[mid]))
				hi = mid;
			else
				lo = mid;
		}
		return c[hi];
	}
};

// Bars whose endpoints are pinned at infinity can only match within their
// own class, never go unmatched, and their optimal assignment is the sorted
// one; a count mismatch forces an infinite distance.
struct InfiniteClass {
	std::vector<Bar> left, right;
	bool by_birth;  // true: births are the finite endpoints, deaths +inf

	double optimum() const {
		if (left.size() != right.size()) return kInf;
		double worst = 0.0;
		auto pick = [&](const Bar& b) { return by_birth ? b.birth : b.death; };
		auto ls = left, rs = right;
		auto cmp = [&](const Bar& a, const Bar& b) { return pick(a) < pick(b); };
		std::sort(ls.begin(), ls.end(), cmp);
		std::sort(rs.begin(), rs.end(), cmp);
		for (size_t i = 0; i < ls.size(); ++i)
			worst = std::max(worst, std::abs(pick(ls[i]) - pick(rs[i])));
		return worst;
	}

	std::vector<std::pair<Bar, Bar>> matching() const {
		auto pick = [&](const Bar& b) { return by_birth ? b.birth : b.death; };
		auto ls = left, rs = right;
		auto cmp = [&](const Bar& a, const Bar& b) { return pick(a) < pick(b); };
		std::sort(ls.begin(), ls.end(), cmp);
		std::sort(rs.begin(), rs.end(), cmp);
		std::vector<std::pair<Bar, Bar>> out;
		for (size_t i = 0; i < ls.size(); ++i) out.push_back({ls[i], rs[i]});
		return out;
	}
};

struct DegreeSplit {
	FiniteClass finite;
	InfiniteClass essential{{}, {}, true};    // [b, +inf)
	InfiniteClass coessential{{}, {}, false}; // [-inf, d)
	std::vector<Bar> full_left, full_right;   // [-inf, +inf)

	DegreeSplit(const std::vector<Bar>& b1, const std::vector<Bar>& b2) {
		auto route = [&](const Bar& b, bool is_left) {
			bool bi = std::isinf(b.birth), di = std::isinf(b.death);
			auto& fin = is_left ? finite.left : finite.right;
			auto& ess = is_left ? essential.left : essential.right;
			auto& coe = is_left ? coessential.left : coessential.right;
			auto& ful = is_left ? full_left : full_right;
			if (!bi && !di) fin.push_back(b);
			else if (!bi && di) ess.push_back(b);
			else if (bi && !di) coe.push_back(b);
			else ful.push_back(b);
		};
		for (const Bar& b : b1) route(b, true);
		for (const Bar& b : b2) route(b, false);
	}

	bool counts_match() const {
		return essential.left.size() == essential.right.size() &&
		       coessential.left.size() == coessential.right.size() &&
		       full_left.size() == full_right.size();
	}

	double optimum() const {
		if (!counts_match()) return kInf;
		return std::max({finite.optimum(), essential.optimum(), coessential.optimum()});
	}

	bool feasible(double eps) const {
		if (!counts_match()) return false;
		if (essential.optimum() > eps || coessential.optimum() > eps) return false;
		return finite.feasible(eps);
	}

	void emit_witness(int degree, double eps, MatchWitness& w) const {
		auto pairs = finite.matching(eps);
		std::vector<char> ml(finite.left.size(), 0), mr(finite.right.size(), 0);
		for (auto [li, rj] : pairs) {
			const Bar& a = finite.left[li];
			const Bar& b = finite.right[rj];
			w.matched.push_back({degree, a, b, pair_cost(a, b)});
			ml[li] = 1;
			mr[rj] = 1;
		}
		for (size_t i = 0; i < finite.left.size(); ++i)
			if (!ml[i])
				w.unmatched.push_back(
				    {degree, true, finite.left[i], unmatched_cost(finite.left[i])});
		for (size_t j = 0; j < finite.right.size(); ++j)
			if (!mr[j])
				w.unmatched.push_back(
				    {degree, false, finite.right[j], unmatched_cost(finite.right[j])});
		for (auto& [a, b] : essential.matching())
			w.matched.push_back({degree, a, b, pair_cost(a, b)});
		for (auto& [a, b] : coessential.matching())
			w.matched.push_back({degree, a, b, pair_cost(a, b)});
		auto fl = full_left, fr = full_right;
		for (size_t i = 0; i < fl.size(); ++i)
			w.matched.push_back({degree, fl[i], fr[i], 0.0});
	}
};

std::vector<int> degrees_in_window(const GradedBarcode& b1, const GradedBarcode& b2,
                                   int lo, int hi) {
	std::set<int> degs;
	for (const auto& [d, bars] : b1.degrees)
		if (!bars.empty()) degs.insert(d);
	for (const auto& [d, bars] : b2.degrees)
		if (!bars.empty()) degs.insert(d);
	std::vector<int> out;
	for (int d : degs)
		if (d >= lo && d <= hi) out.push_back(d);
	return out;
}

// Deterministic tie-break key for the active term.
std::tuple<int, double, double, int> active_key(const ActiveTerm& t) {
	const Bar& b = (t.matched || t.left_side) ? t.left : t.right;
	int rank = t.matched ? 0 : (t.left_side ? 1 : 2);
	return {t.degree, b.birth, b.death, rank};
}

void select_active(MatchWitness& w, double eps) {
	std::optional<ActiveTerm> best;
	auto consider = [&](const ActiveTerm& t) {
		if (t.cost != eps) return;
		if (!best || active_key(t) < active_key(*best)) best = t;
	};
	for (const auto& mp : w.matched) {
		ActiveTerm t;
		t.degree = mp.degree;
		t.cost = mp.cost;
		t.matched = true;
		t.left = mp.left;
		t.right = mp.right;
		double bd = endpoint_diff(mp.left.birth, mp.right.birth);
		double dd = endpoint_diff(mp.left.death, mp.right.death);
		t.endpoint = bd >= dd ? ActiveEndpoint::Birth : ActiveEndpoint::Death;
		consider(t);
	}
	for (const auto& um : w.unmatched) {
		ActiveTerm t;
		t.degree = um.degree;
		t.cost = um.cost;
		t.matched = false;
		t.left_side = um.left_side;
		if (um.left_side) t.left = um.bar; else t.right = um.bar;
		consider(t);
	}
	w.active = best;
}

}  // namespace

bool epsilon_matching_exists(const GradedBarcode& b1, const GradedBarcode& b2, double eps,
                             MatchWitness* witness) {
	if (eps < 0.0) throw std::invalid_argument("negative matching tolerance");
	auto degs = degrees_in_window(b1, b2, INT_MIN, INT_MAX);
	std::vector<DegreeSplit> splits;
	for (int d : degs) {
		splits.emplace_back(b1.at(d), b2.at(d));
		if (!splits.back().feasible(eps)) return false;
	}
	if (witness) {
		*witness = MatchWitness{};
		witness->epsilon = eps;
		for (size_t k = 0; k < degs.size(); ++k) splits[k].emit_witness(degs[k], eps, *witness);
		double realized = 0.0;
		for (const auto& mp : witness->matched) realized = std::max(realized, mp.cost);
		for (const auto& um : witness->unmatched) realized = std::max(realized, um.cost);
		select_active(*witness, realized);
	}
	return true;
}

BottleneckResult bottleneck(const GradedBarcode& b1, const GradedBarcode& b2, int degree_lo,
                            int degree_hi) {
	BottleneckResult res;
	auto degs = degrees_in_window(b1, b2, degree_lo, degree_hi);
	double value = 0.0;
	std::vector<std::pair<int, DegreeSplit>> splits;
	for (int d : degs) {
		splits.emplace_back(d, DegreeSplit(b1.at(d), b2.at(d)));
		value = std::max(value, splits.back().second.optimum());
	}
	res.value = value;
	res.witness.epsilon = value;
	if (std::isinf(value)) return res;  // no finite matching; witness left empty
	for (auto& [d, split] : splits) split.emit_witness(d, value, res.witness);
	select_active(res.witness, value);
	return res;
}

double convolution_distance_1d(const GradedBarcode& b1, const GradedBarcode& b2) {
	return bottleneck(b1, b2).value;
}

std::string witness_to_json(const MatchWitness& w) {
	using nlohmann::json;
	auto num = [](double x) -> json {
		if (std::isinf(x)) return x > 0 ? json("inf") : json("-inf");
		return json(x);
	};
	auto bar = [&](const Bar& b) { return json::array({num(b.birth), num(b.death)}); };
	json j;
	j["epsilon"] = num(w.epsilon);
	j["matched"] = json::array();
	for (const auto& mp : w.matched)
		j["matched"].push_back(
		    {{"degree", mp.degree}, {"f", bar(mp.left)}, {"g", bar(mp.right)}, {"cost", num(mp.cost)}});
	j["unmatched"] = json::array();
	for (const auto& um : w.unmatched)
		j["unmatched"].push_back({{"degree", um.degree},
		                          {"side", um.left_side ? "f" : "g"},
		                          {"bar", bar(um.bar)},
		                          {"cost", num(um.cost)}});
	if (w.active) {
		const auto& a = *w.active;
		json ja;
		ja["degree"] = a.degree;
		ja["cost"] = num(a.cost);
		ja["matched"] = a.matched;
		if (a.matched) {
			ja["f"] = bar(a.left);
			ja["g"] = bar(a.right);
			ja["endpoint"] = a.endpoint == ActiveEndpoint::Birth ? "birth" : "death";
		} else {
			ja["side"] = a.left_side ? "f" : "g";
			ja["bar"] = bar(a.left_side ? a.left : a.right);
		}
		j["active"] = ja;
	}
	return j.dump(2);
}

}  // namespace projbar
