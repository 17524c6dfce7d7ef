#include "dio/count.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <memory>
#include <thread>

#include "dio/errors.hpp"

namespace dio {

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::FullScan: return "full_scan";
        case CountMethod::PrunedMonotone: return "pruned_monotone";
        case CountMethod::ClosedForm: return "closed_form";
    }
    return "?";
}

Rat density(const Int& pi, const BoxDomain& box) {
    Int vol = box.volume();
    if (pi > vol) throw CountExceedsBoxError("count exceeds box volume");
    return Rat(pi) / Rat(vol);
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Dir { None, Inc, Dec };

// One equation compiled for the engine: polynomial terms in factored form
// (with a machine-integer mirror when the box certifies no overflow), or the
// expression tree for non-algebraic input.
struct EvalUnit {
    struct Term {
        Int coeff;
        long long coeff_ll = 0;
        std::vector<std::pair<int, unsigned>> factors;  // (0-based var, exponent)
    };

    bool algebraic = false;
    std::vector<Term> terms;
    bool fast_ok = false;
    const Expr* expr = nullptr;
    std::vector<Trend> trend;  // by 0-based var, sized box.k
    std::vector<bool> used;
    int complete_depth = -1;  // depth at which the last used variable is assigned
    Dir bisect_dir = Dir::None;

    template <class I>
    I eval_terms(const std::vector<I>& pt) const {
        I acc = 0;
        for (const auto& t : terms) {
            I val;
            if constexpr (std::is_same_v<I, long long>)
                val = t.coeff_ll;
            else
                val = t.coeff;
            for (const auto& [var, exp] : t.factors) {
                I p = pt[var];
                for (unsigned e = 1; e < exp; ++e) p *= pt[var];
                val *= p;
            }
            acc += val;
        }
        return acc;
    }
};

struct Engine {
    long long N = 1;
    int box_k = 1;
    std::vector<EvalUnit> units;
    std::vector<int> order;      // 0-based vars actually constrained, in assignment order
    std::vector<int> order_pos;  // var -> depth (INT_MAX when free)
    std::vector<std::vector<const EvalUnit*>> completed_at;  // by depth
    int free_dims = 0;           // box dimensions no equation constrains
    std::vector<Int> npow;       // N^0..N^maxdeg
    std::vector<long long> npow_ll;
    bool any_bisect = false;
    bool tautology = false;      // no constraints left after folding
    bool contradiction = false;  // some equation is a nonzero constant

    Clock::time_point deadline{};
    bool has_deadline = false;
    std::shared_ptr<std::atomic<bool>> expired = std::make_shared<std::atomic<bool>>(false);

    bool collect = false;
    std::size_t solution_limit = 0;
};

struct Worker {
    const Engine* eng;
    std::vector<Int> ptb;
    std::vector<long long> ptf;
    Int count = 0;
    std::vector<std::vector<long long>> sols;
    bool sols_overflow = false;
    long long tick = 0;
    bool timed_out = false;

    explicit Worker(const Engine& e)
        : eng(&e), ptb(e.box_k, Int(1)), ptf(e.box_k, 1) {}

    void assign(int var, long long v) {
        ptf[var] = v;
        ptb[var] = v;
    }

    bool check_time() {
        if (++tick % 4096 != 0) return timed_out;
        if (eng->expired->load(std::memory_order_relaxed)) {
            timed_out = true;
            return true;
        }
        if (eng->has_deadline && Clock::now() >= eng->deadline) {
            eng->expired->store(true, std::memory_order_relaxed);
            timed_out = true;
            return true;
        }
        return false;
    }

    int sign_of(const EvalUnit& u) {
        if (u.fast_ok) {
            long long v = u.eval_terms(ptf);
            return v > 0 ? 1 : v < 0 ? -1 : 0;
        }
        Int v = u.algebraic ? u.eval_terms(ptb) : evaluate(*u.expr, ptb);
        return v > 0 ? 1 : v < 0 ? -1 : 0;
    }

    template <class I>
    bool interval_impl(const EvalUnit& u, int d, const std::vector<I>& pt,
                       const std::vector<I>& npow) {
        I lo = 0, hi = 0;
        for (const auto& t : u.terms) {
            I val;
            if constexpr (std::is_same_v<I, long long>)
                val = t.coeff_ll;
            else
                val = t.coeff;
            unsigned open = 0;
            for (const auto& [var, exp] : t.factors) {
                if (eng->order_pos[var] < d) {
                    I p = pt[var];
                    for (unsigned e = 1; e < exp; ++e) p *= pt[var];
                    val *= p;
                } else {
                    open += exp;
                }
            }
            if (open == 0) {
                lo += val;
                hi += val;
            } else if (val > 0) {
                lo += val;
                hi += val * npow[open];
            } else {
                lo += val * npow[open];
                hi += val;
            }
        }
        return lo > 0 || hi < 0;
    }

    // Interval of the unit's value with the variables assigned before depth d
    // pinned and the rest ranging over [1..N]; true when 0 is excluded.
    bool interval_excludes_zero(const EvalUnit& u, int d) {
        if (!u.algebraic) return false;
        if (u.fast_ok) return interval_impl<long long>(u, d, ptf, eng->npow_ll);
        return interval_impl<Int>(u, d, ptb, eng->npow);
    }

    // Zero range of a monotone completed unit, within [lo..hi] of its last
    // variable. Returns false when empty. Plateaus are handled exactly: for
    // non-decreasing F the zeros sit between the first F >= 0 and the last
    // F <= 0.
    bool bisect_zero_range(const EvalUnit& u, int var, long long& lo, long long& hi) {
        const bool inc = u.bisect_dir == Dir::Inc;
        auto sign_at = [&](long long v) {
            assign(var, v);
            int s = sign_of(u);
            return inc ? s : -s;
        };
        long long a = lo, b = hi + 1;  // first v with F >= 0
        while (a < b) {
            long long mid = a + (b - a) / 2;
            if (sign_at(mid) >= 0)
                b = mid;
            else
                a = mid + 1;
        }
        const long long first = a;
        a = lo - 1;
        b = hi;  // last v with F <= 0
        while (a < b) {
            long long mid = a + (b - a + 1) / 2;
            if (sign_at(mid) <= 0)
                a = mid;
            else
                b = mid - 1;
        }
        const long long last = a;
        if (first > last) return false;
        lo = first;
        hi = last;
        return true;
    }

    void record_solution() {
        if (sols.size() >= eng->solution_limit) {
            sols_overflow = true;
            return;
        }
        sols.emplace_back(ptf.begin(), ptf.end());
    }

    void dfs(int d, long long range_lo, long long range_hi) {
        if (timed_out) return;
        for (const auto& u : eng->units)
            if (u.complete_depth >= d && interval_excludes_zero(u, d)) return;

        const int var = eng->order[d];
        long long lo = range_lo, hi = range_hi;
        bool bisected = false, any_pointwise = false;
        for (const EvalUnit* u : eng->completed_at[d]) {
            if (u->bisect_dir != Dir::None) {
                if (!bisect_zero_range(*u, var, lo, hi)) return;
                bisected = true;
            } else {
                any_pointwise = true;
            }
        }

        const bool leaf = d + 1 == static_cast<int>(eng->order.size());
        if (leaf && bisected && !any_pointwise) {
            count += hi - lo + 1;
            if (eng->collect) {
                for (long long v = lo; v <= hi; ++v) {
                    if (sols.size() >= eng->solution_limit) {
                        sols_overflow = true;
                        break;
                    }
                    assign(var, v);
                    record_solution();
                }
            }
            return;
        }

        for (long long v = lo; v <= hi; ++v) {
            if (check_time()) return;
            assign(var, v);
            if (any_pointwise) {
                bool ok = true;
                for (const EvalUnit* u : eng->completed_at[d])
                    if (u->bisect_dir == Dir::None && sign_of(*u) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
            }
            if (leaf) {
                ++count;
                if (eng->collect) record_solution();
            } else {
                dfs(d + 1, 1, eng->N);
            }
        }
    }
};

Trend poly_trend(const Polynomial& p, int var) {
    auto prof = p.profile(var);
    if (!prof.present) return Trend::Constant;
    if (prof.all_positive) return Trend::Increasing;
    if (prof.all_negative) return Trend::Decreasing;
    return Trend::Unknown;
}

Engine build_engine(const std::vector<const Equation*>& eqs, const BoxDomain& box,
                    const CountOptions& options) {
    Engine eng;
    eng.N = box.N;
    eng.box_k = box.k;
    eng.collect = options.collect_solutions;
    eng.solution_limit = options.solution_limit;

    for (const Equation* eq : eqs) {
        if (eq->var_count > box.k)
            throw Error("equation uses more variables than the box provides: " + eq->source);
        EvalUnit u;
        u.algebraic = eq->algebraic;
        u.used.assign(box.k, false);
        u.trend.assign(box.k, Trend::Constant);
        if (eq->algebraic) {
            const Polynomial& p = *eq->poly;
            if (p.is_zero()) continue;  // tautology constrains nothing
            if (p.is_constant()) {
                eng.contradiction = true;
                continue;
            }
            for (const auto& [exps, coeff] : p.terms()) {
                EvalUnit::Term t;
                t.coeff = coeff;
                for (int i = 0; i < p.var_count(); ++i)
                    if (exps[i] > 0) t.factors.emplace_back(i, exps[i]);
                u.terms.push_back(std::move(t));
            }
            u.fast_ok = p.magnitude_bound(box.N) < (Int(1) << 62);
            if (u.fast_ok)
                for (auto& t : u.terms) t.coeff_ll = t.coeff.convert_to<long long>();
            for (int v = 1; v <= p.var_count(); ++v) {
                auto prof = p.profile(v);
                u.used[v - 1] = prof.present;
                u.trend[v - 1] = poly_trend(p, v);
            }
        } else {
            u.expr = &eq->f;
            std::vector<bool> used;
            collect_variables(eq->f, used);
            for (std::size_t i = 0; i < used.size(); ++i) {
                if (!used[i]) continue;
                u.used[i] = true;
                u.trend[i] = trend_in(eq->f, static_cast<int>(i) + 1);
            }
        }
        eng.units.push_back(std::move(u));
    }

    eng.tautology = eng.units.empty() && !eng.contradiction;
    if (eng.contradiction || eng.tautology) return eng;

    std::vector<bool> constrained(box.k, false);
    for (const auto& u : eng.units)
        for (int v = 0; v < box.k; ++v)
            if (u.used[v]) constrained[v] = true;

    std::vector<int> order;
    for (int v = 0; v < box.k; ++v)
        if (constrained[v]) order.push_back(v);
    eng.free_dims = box.k - static_cast<int>(order.size());

    // For a single equation, move one monotone variable to the end so its
    // value comes from bisection; prefer variables that stay out of exponents
    // (their evaluations stay small), then the highest index.
    if (eng.units.size() == 1) {
        const EvalUnit& u = eng.units[0];
        int pick = -1;
        bool pick_tame = false;
        for (int v : order) {
            Trend t = u.trend[v];
            if (t != Trend::Increasing && t != Trend::Decreasing) continue;
            bool tame = u.algebraic || !occurs_exponentially(*u.expr, v + 1);
            if (pick == -1 || (tame && !pick_tame) || tame == pick_tame) {
                pick = v;
                pick_tame = tame;
            }
        }
        if (pick != -1) {
            order.erase(std::find(order.begin(), order.end(), pick));
            order.push_back(pick);
        }
    }
    eng.order = order;
    eng.order_pos.assign(box.k, std::numeric_limits<int>::max());
    for (std::size_t d = 0; d < order.size(); ++d) eng.order_pos[order[d]] = static_cast<int>(d);

    eng.completed_at.assign(order.size(), {});
    for (auto& u : eng.units) {
        int last = -1;
        for (int v = 0; v < box.k; ++v)
            if (u.used[v]) last = std::max(last, eng.order_pos[v]);
        u.complete_depth = last;
        Trend t = u.trend[eng.order[last]];
        if (t == Trend::Increasing)
            u.bisect_dir = Dir::Inc;
        else if (t == Trend::Decreasing)
            u.bisect_dir = Dir::Dec;
        eng.completed_at[last].push_back(&u);
        if (u.bisect_dir != Dir::None) eng.any_bisect = true;
    }

    int maxdeg = 0;
    for (const auto& u : eng.units)
        for (const auto& t : u.terms) {
            unsigned s = 0;
            for (const auto& [var, exp] : t.factors) s += exp;
            maxdeg = std::max(maxdeg, static_cast<int>(s));
        }
    eng.npow.resize(maxdeg + 1);
    eng.npow_ll.assign(maxdeg + 1, 1);
    for (int i = 0; i <= maxdeg; ++i) eng.npow[i] = ipow(Int(box.N), i);
    for (int i = 1; i <= maxdeg; ++i) {
        // Saturate; only overflow-checked fast units ever read these.
        long long prev = eng.npow_ll[i - 1];
        eng.npow_ll[i] = prev > std::numeric_limits<long long>::max() / box.N
                             ? std::numeric_limits<long long>::max()
                             : prev * box.N;
    }

    if (options.timeout_secs > 0) {
        eng.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(options.timeout_secs));
        eng.has_deadline = true;
    }
    return eng;
}

CountReport run_counts(const std::vector<const Equation*>& eqs, const BoxDomain& box,
                       const CountOptions& options) {
    const auto start = Clock::now();
    Engine eng = build_engine(eqs, box, options);
    CountReport report;

    if (eng.contradiction || eng.tautology) {
        report.method = CountMethod::ClosedForm;
        report.pi = eng.contradiction ? Int(0) : box.volume();
        if (eng.tautology && options.collect_solutions) {
            std::vector<long long> t(box.k, 1);
            while (report.solutions.size() < options.solution_limit) {
                report.solutions.push_back(t);
                int i = box.k - 1;
                while (i >= 0 && t[i] == box.N) t[i--] = 1;
                if (i < 0) break;
                ++t[i];
            }
        }
        report.solutions_complete =
            options.collect_solutions && Int(report.solutions.size()) == report.pi;
    } else {
        int workers = std::max(1, options.workers);
        workers = static_cast<int>(std::min<long long>(workers, eng.N));
        std::vector<Worker> ctxs;
        ctxs.reserve(workers);
        for (int w = 0; w < workers; ++w) ctxs.emplace_back(eng);

        if (workers == 1) {
            ctxs[0].dfs(0, 1, eng.N);
        } else {
            std::vector<std::thread> threads;
            threads.reserve(workers);
            for (int w = 0; w < workers; ++w) {
                long long lo = 1 + eng.N * w / workers;
                long long hi = eng.N * (w + 1) / workers;
                threads.emplace_back([&eng, &ctxs, w, lo, hi] { ctxs[w].dfs(0, lo, hi); });
            }
            for (auto& t : threads) t.join();
        }

        Int base_count = 0;
        bool overflow = false, timed_out = false;
        for (auto& c : ctxs) {
            base_count += c.count;
            timed_out = timed_out || c.timed_out;
            overflow = overflow || c.sols_overflow;
        }
        report.pi = base_count * ipow(Int(box.N), eng.free_dims);
        report.partial = timed_out;
        report.method = eng.any_bisect ? CountMethod::PrunedMonotone : CountMethod::FullScan;

        if (options.collect_solutions) {
            if (eng.free_dims == 0) {
                for (auto& c : ctxs)
                    for (auto& s : c.sols) {
                        if (report.solutions.size() >= options.solution_limit) {
                            overflow = true;
                            break;
                        }
                        report.solutions.push_back(std::move(s));
                    }
            } else {
                // Extend each base tuple across the unconstrained coordinates.
                std::vector<int> free_vars;
                for (int v = 0; v < box.k; ++v)
                    if (eng.order_pos[v] == std::numeric_limits<int>::max())
                        free_vars.push_back(v);
                for (auto& c : ctxs) {
                    for (auto& s : c.sols) {
                        std::vector<long long> t = s;
                        for (int v : free_vars) t[v] = 1;
                        while (true) {
                            if (report.solutions.size() >= options.solution_limit) {
                                overflow = true;
                                break;
                            }
                            report.solutions.push_back(t);
                            int i = static_cast<int>(free_vars.size()) - 1;
                            while (i >= 0 && t[free_vars[i]] == box.N) t[free_vars[i--]] = 1;
                            if (i < 0) break;
                            ++t[free_vars[i]];
                        }
                        if (overflow) break;
                    }
                    if (overflow) break;
                }
            }
            report.solutions_complete = !overflow && !timed_out;
        }
    }

    report.density = density(report.pi, box);
    report.probability = report.density;
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

}  // namespace

CountReport count_solutions(const Equation& eq, const BoxDomain& box,
                            const CountOptions& options) {
    return run_counts({&eq}, box, options);
}

CountReport count_system(const std::vector<Equation>& eqs, const BoxDomain& box,
                         const CountOptions& options) {
    if (eqs.empty()) throw Error("count_system: empty system");
    std::vector<const Equation*> ptrs;
    ptrs.reserve(eqs.size());
    for (const auto& e : eqs) ptrs.push_back(&e);
    return run_counts(ptrs, box, options);
}

CountReport count_explicit(const Equation& eq, const BoxDomain& box,
                           const CountOptions& options) {
    if (!eq.explicit_form)
        throw NotExplicitError("equation is not written as x_i = f(...): " + eq.source);
    if (eq.var_count > box.k)
        throw Error("equation uses more variables than the box provides: " + eq.source);
    const auto start = Clock::now();

    const Expr& f = eq.explicit_form->rhs;
    std::vector<bool> used;
    collect_variables(f, used);
    std::vector<int> loop_vars;  // 1-based
    for (std::size_t i = 0; i < used.size(); ++i)
        if (used[i]) loop_vars.push_back(static_cast<int>(i) + 1);
    // Box coordinates f never reads; the isolated variable is determined, so
    // it is not among them.
    const int free_dims = box.k - static_cast<int>(loop_vars.size()) - 1;

    Clock::time_point deadline{};
    const bool has_deadline = options.timeout_secs > 0;
    if (has_deadline)
        deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(options.timeout_secs));

    CountReport report;
    report.method = CountMethod::FullScan;
    Int hits = 0;
    std::vector<Int> point(eq.var_count, 1);
    std::vector<long long> idx(loop_vars.size(), 1);
    long long tick = 0;
    while (true) {
        if (++tick % 1024 == 0 && has_deadline && Clock::now() >= deadline) {
            report.partial = true;
            break;
        }
        for (std::size_t i = 0; i < loop_vars.size(); ++i) point[loop_vars[i] - 1] = idx[i];
        Int value = evaluate(f, point);
        if (value >= 1 && value <= box.N) ++hits;
        int i = static_cast<int>(loop_vars.size()) - 1;
        while (i >= 0 && idx[i] == box.N) idx[i--] = 1;
        if (i < 0) break;
        ++idx[i];
    }

    report.pi = hits * ipow(Int(box.N), free_dims);
    report.density = density(report.pi, box);
    report.probability = report.density;
    report.solutions_complete = false;
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
}

bool verify_bound(const Equation& eq, const BoxDomain& box, const CountReport& report) {
    const Polynomial& p = expand_polynomial(eq);
    const int n = p.total_degree();
    if (n < 1) throw Error("verify_bound: degree must be >= 1");
    return report.pi <= n * ipow(Int(box.N), box.k - 1);
}

}  // namespace dio
