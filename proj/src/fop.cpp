#include "quadfop/fop.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <memory>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "sieve.hpp"

namespace quadfop::fop {

using u64 = std::uint64_t;
using i128 = __int128;

namespace {

bool fits_i64(const Int& x) { return mpz_fits_slong_p(x.get_mpz_t()); }

Int K_of(const QuadraticFamily& q) { return (q.primed ? Int(1) : Int(4)) * q.s * q.nu; }

std::shared_ptr<const std::vector<u64>> primes_for(u64 count) {
    static std::mutex mu;
    static std::shared_ptr<const std::vector<u64>> cache = std::make_shared<std::vector<u64>>();
    std::lock_guard<std::mutex> lock(mu);
    if (cache->size() < count)
        cache = std::make_shared<std::vector<u64>>(arith::first_primes(std::max<u64>(count, 2 * cache->size())));
    return cache;
}

Int power_trace(const PowerTrace& tr, u64 t) {
    Int tt = static_cast<unsigned long>(t);
    Int x;
    mpz_pow_ui(x.get_mpz_t(), tt.get_mpz_t(), tr.h);
    return tr.c * x + tr.c0;
}

u64 count_admitted(const PolyFamily& f, u64 lo, u64 hi) {
    if (hi < lo) return 0;
    const auto* q = f.quadratic();
    if (!q || !q->filter) return hi - lo + 1;
    const u64 m = q->filter->modulus;
    auto upto = [&](u64 x, u64 rho) -> u64 {  // #{1 <= t <= x : t = rho mod m}, rho in [0, m)
        if (x == 0) return 0;
        u64 first = rho == 0 ? m : rho;
        return x < first ? 0 : (x - first) / m + 1;
    };
    u64 total = 0;
    for (u64 rho : q->filter->residues) total += upto(hi, rho) - upto(lo - 1, rho);
    return total;
}

// Largest |m(t)| for t in [lo, hi], or empty if it is not below 2^62.
std::optional<u64> small_bound(const PolyFamily& f, u64 lo, u64 hi) {
    const auto* q = f.quadratic();
    if (!q) return std::nullopt;
    Int K = K_of(*q);
    Int Tmax;
    if (const auto* pt = std::get_if<PowerTrace>(&q->trace)) {
        Int a = abs(power_trace(*pt, lo)), b = abs(power_trace(*pt, hi));
        Tmax = std::max(a, b);
    } else {
        Tmax = static_cast<unsigned long>((*primes_for(hi))[hi - 1]);
    }
    Int bound = Tmax * Tmax + abs(K);
    if (bound >= (Int(1) << 62)) return std::nullopt;
    return bound.get_ui();
}

i128 small_key(std::int64_t M, DedupKey key) {
    if (key == DedupKey::radical) return M;
    std::int64_t r = ((M % 4) + 4) % 4;
    return r == 1 ? i128(M) : i128(M) * 4;
}

Int big_key(const Int& M, DedupKey key) { return key == DedupKey::radical ? M : discriminant_unchecked(M); }

template <class Rec, class KeyFn>
void sort_unique(std::vector<Rec>& v, KeyFn keyf, FirstOrder order) {
    std::sort(v.begin(), v.end(), [&](const Rec& a, const Rec& b) {
        auto ka = keyf(a), kb = keyf(b);
        if (ka != kb) return ka < kb;
        if (order == FirstOrder::family_major && a.family != b.family) return a.family < b.family;
        if (a.t != b.t) return a.t < b.t;
        return a.family < b.family;
    });
    auto last = std::unique(v.begin(), v.end(), [&](const Rec& a, const Rec& b) { return keyf(a) == keyf(b); });
    v.erase(last, v.end());
}

struct Prepared {
    enum class Path { sieve, small, big } path;
    std::optional<detail::LinearSieve> sieve;
    Int K;
    std::int64_t K64 = 0;
};

FopRecord to_big(const FopResult::Small& s) {
    return FopRecord{Int(static_cast<long>(s.M)), Int(static_cast<unsigned long>(s.r)), s.t, s.family};
}

}  // namespace

unsigned default_workers() {
    if (const char* env = std::getenv("QUADFOP_WORKERS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::uint64_t PolyFamily::t_start() const {
    return std::visit([](const auto& k) { return k.t_start; }, kind);
}

bool PolyFamily::admits(std::uint64_t t) const {
    if (t < t_start()) return false;
    const auto* q = quadratic();
    if (!q || !q->filter) return true;
    u64 r = t % q->filter->modulus;
    return std::find(q->filter->residues.begin(), q->filter->residues.end(), r) != q->filter->residues.end();
}

Int PolyFamily::trace(std::uint64_t t) const {
    const auto* q = quadratic();
    if (!q) throw std::logic_error("PolyFamily::trace: not a quadratic family");
    if (const auto* pt = std::get_if<PowerTrace>(&q->trace)) return power_trace(*pt, t);
    if (t == 0) throw std::invalid_argument("prime(0) is undefined");
    return static_cast<unsigned long>((*primes_for(t))[t - 1]);
}

Int PolyFamily::value(std::uint64_t t) const {
    if (const auto* g = std::get_if<GeneralFamily>(&kind)) return g->m(Int(static_cast<unsigned long>(t)));
    Int T = trace(t);
    return T * T - K_of(*quadratic());
}

void PolyFamily::validate() const {
    if (const auto* q = quadratic()) {
        if (q->s != 1 && q->s != -1) throw std::invalid_argument("family: s must be -1 or 1");
        if (q->nu < 1) throw std::invalid_argument("family: nu must be at least 1");
        if (const auto* pt = std::get_if<PowerTrace>(&q->trace)) {
            if (pt->c < 1 || pt->h < 1) throw std::invalid_argument("family: trace needs c >= 1 and h >= 1");
        }
        if (q->filter) {
            if (q->filter->modulus < 2) throw std::invalid_argument("family: filter modulus must be at least 2");
            if (q->filter->residues.empty()) throw std::invalid_argument("family: empty residue set");
            for (u64 r : q->filter->residues)
                if (r >= q->filter->modulus) throw std::invalid_argument("family: residue out of range");
        }
    } else {
        const auto& g = std::get<GeneralFamily>(kind);
        if (g.m.degree() < 1) throw std::invalid_argument("family: polynomial must be non-constant");
    }
    if (t_start() < 1) throw std::invalid_argument("family: t starts at 1 or later");
}

std::string PolyFamily::describe() const {
    if (!label.empty()) return label;
    std::ostringstream os;
    if (const auto* q = quadratic()) {
        os << "T^2 " << (q->s > 0 ? "- " : "+ ") << (q->primed ? Int(q->nu) : Int(4 * q->nu)).get_str() << ", T = ";
        if (const auto* pt = std::get_if<PowerTrace>(&q->trace)) {
            os << IntPoly::monomial(pt->c, pt->h).operator+=(IntPoly::constant(pt->c0)).to_string("t");
        } else {
            os << "prime(t)";
        }
        if (q->filter) {
            os << ", t mod " << q->filter->modulus << " in {";
            for (std::size_t i = 0; i < q->filter->residues.size(); ++i) os << (i ? "," : "") << q->filter->residues[i];
            os << "}";
        }
    } else {
        os << std::get<GeneralFamily>(kind).m.to_string("t");
    }
    return os.str();
}

PolyFamily unit_family(int s, std::uint64_t t_start) {
    QuadraticFamily q;
    q.s = s;
    q.t_start = t_start;
    return PolyFamily(q);
}

PolyFamily norm_family(int s, const Int& nu) {
    QuadraticFamily q;
    q.s = s;
    q.nu = nu;
    return PolyFamily(q);
}

PolyFamily primed_family(int s, const Int& nu) {
    QuadraticFamily q;
    q.s = s;
    q.nu = nu;
    q.primed = true;
    return PolyFamily(q);
}

FopRecord FopResult::operator[](std::size_t i) const { return small_mode_ ? to_big(small_[i]) : big_[i]; }

Int FopResult::key(std::size_t i) const {
    if (small_mode_) {
        i128 k = small_key(small_[i].M, dedup_);
        // |k| < 2^64 here
        Int out = static_cast<unsigned long>(static_cast<u64>(k < 0 ? -k : k));
        return k < 0 ? Int(-out) : out;
    }
    return big_key(big_[i].M, dedup_);
}

std::vector<FopRecord> FopResult::positive() const {
    std::vector<FopRecord> out;
    for (std::size_t i = 0; i < size(); ++i) {
        if (small_mode_ ? small_[i].M >= 2 : big_[i].M >= 2) out.push_back((*this)[i]);
    }
    return out;
}

void FopResult::finish(std::uint64_t B) {
    bound_ = B;
    stats_.count = size();
    stats_.gap = stats_.sweep - stats_.count;
    stats_.max_M = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        if (small_mode_) {
            if (stats_.max_M < small_[i].M) stats_.max_M = static_cast<long>(small_[i].M);
        } else if (stats_.max_M < big_[i].M) {
            stats_.max_M = big_[i].M;
        }
    }
}

FopResult run_fop_range(const std::vector<PolyFamily>& families, std::uint64_t t_lo, std::uint64_t t_hi,
                        DedupKey key, const FopOptions& options) {
    if (families.empty()) throw std::invalid_argument("run_fop: no families");
    if (t_lo < 1 || t_hi < t_lo) throw std::invalid_argument("run_fop: bound must be at least 1");
    for (const auto& f : families) f.validate();

    FopResult res;
    res.dedup_ = key;
    res.order_ = options.order;
    res.families_ = families;
    const FirstOrder order = options.order;

    // Small mode keeps everything in machine words; any oversized family switches all to mpz.
    std::vector<Prepared> prep(families.size());
    bool small = true;
    std::vector<std::optional<u64>> bounds(families.size());
    for (std::size_t f = 0; f < families.size(); ++f) {
        bounds[f] = small_bound(families[f], std::max(t_lo, families[f].t_start()), t_hi);
        if (!bounds[f]) small = false;
    }
    for (std::size_t f = 0; f < families.size(); ++f) {
        const auto* q = families[f].quadratic();
        if (q) prep[f].K = K_of(*q);
        if (!small) {
            prep[f].path = Prepared::Path::big;
            continue;
        }
        prep[f].K64 = prep[f].K.get_si();
        const auto* pt = std::get_if<PowerTrace>(&q->trace);
        if (options.allow_sieve && pt && pt->h == 1 && fits_i64(pt->c) && fits_i64(pt->c0)) {
            prep[f].path = Prepared::Path::sieve;
            prep[f].sieve.emplace(pt->c.get_si(), pt->c0.get_si(), prep[f].K64, *bounds[f]);
        } else {
            prep[f].path = Prepared::Path::small;
        }
    }
    std::shared_ptr<const std::vector<u64>> prime_table;
    for (const auto& f : families)
        if (f.quadratic() && std::holds_alternative<PrimeTrace>(f.quadratic()->trace)) prime_table = primes_for(t_hi);
    res.small_mode_ = small;

    const u64 chunk = std::max<u64>(options.chunk, 1);
    const u64 nchunks = (t_hi - t_lo) / chunk + 1;
    std::vector<std::vector<FopResult::Small>> small_parts(small ? nchunks : 0);
    std::vector<std::vector<FopRecord>> big_parts(small ? 0 : nchunks);
    std::vector<u64> evaluated(nchunks, 0);
    std::atomic<u64> next{0};
    std::atomic<u64> done_t{0};
    std::mutex progress_mu;
    std::exception_ptr failure;
    std::mutex failure_mu;

    auto worker = [&]() {
        std::vector<std::int64_t> Ms;
        std::vector<u64> rs;
        std::vector<std::vector<std::int64_t>> fam_M(families.size());
        std::vector<std::vector<u64>> fam_r(families.size());
        for (;;) {
            u64 ci = next.fetch_add(1);
            if (ci >= nchunks) return;
            try {
                const u64 lo = t_lo + ci * chunk;
                const u64 hi = std::min(t_hi, lo + chunk - 1);
                if (small) {
                    for (std::size_t f = 0; f < families.size(); ++f) {
                        const u64 flo = std::max(lo, families[f].t_start());
                        fam_M[f].clear();
                        fam_r[f].clear();
                        if (flo > hi) continue;
                        if (prep[f].path == Prepared::Path::sieve) {
                            prep[f].sieve->run(flo, hi, fam_M[f], fam_r[f]);
                        } else {
                            const auto* q = families[f].quadratic();
                            for (u64 t = flo; t <= hi; ++t) {
                                i128 T;
                                if (const auto* pt = std::get_if<PowerTrace>(&q->trace)) {
                                    T = static_cast<i128>(pt->c.get_si());
                                    for (unsigned k = 0; k < pt->h; ++k) T *= static_cast<i128>(t);
                                    T += pt->c0.get_si();
                                } else {
                                    T = static_cast<i128>((*prime_table)[t - 1]);
                                }
                                i128 m = T * T - prep[f].K64;
                                if (m == 0) {
                                    fam_M[f].push_back(0);
                                    fam_r[f].push_back(1);
                                    continue;
                                }
                                auto c = arith::squarefree_core64(static_cast<u64>(m < 0 ? -m : m));
                                fam_M[f].push_back((m < 0 ? -1 : 1) * static_cast<std::int64_t>(c.core));
                                fam_r[f].push_back(c.r);
                            }
                        }
                    }
                    auto& out = small_parts[ci];
                    for (u64 t = lo; t <= hi; ++t) {
                        for (std::size_t f = 0; f < families.size(); ++f) {
                            const u64 flo = std::max(lo, families[f].t_start());
                            if (t < flo || !families[f].admits(t)) continue;
                            ++evaluated[ci];
                            out.push_back({fam_M[f][t - flo], fam_r[f][t - flo], t, static_cast<std::uint32_t>(f)});
                        }
                    }
                    sort_unique(out, [&](const FopResult::Small& s) { return small_key(s.M, key); }, order);
                } else {
                    auto& out = big_parts[ci];
                    for (u64 t = lo; t <= hi; ++t) {
                        for (std::size_t f = 0; f < families.size(); ++f) {
                            if (!families[f].admits(t)) continue;
                            ++evaluated[ci];
                            Int m = families[f].value(t);
                            if (m == 0) {
                                out.push_back(FopRecord{Int(0), Int(1), t, f});
                            } else {
                                auto c = arith::squarefree_core(m);
                                out.push_back(FopRecord{std::move(c.M), std::move(c.r), t, f});
                            }
                        }
                    }
                    sort_unique(out, [&](const FopRecord& s) { return big_key(s.M, key); }, order);
                }
                u64 d = done_t.fetch_add(hi - lo + 1) + (hi - lo + 1);
                if (options.progress) {
                    std::lock_guard<std::mutex> lock(progress_mu);
                    options.progress(d, t_hi - t_lo + 1);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                next = nchunks;
                return;
            }
        }
    };

    unsigned nw = options.workers ? options.workers : default_workers();
    nw = static_cast<unsigned>(std::min<u64>(nw, nchunks));
    if (nw <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < nw; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (u64 e : evaluated) res.stats_.evaluated += e;
    for (const auto& f : families) res.stats_.sweep += count_admitted(f, t_lo, t_hi);

    // Chunks are in ascending t, so concatenation keeps (t, family) order within equal keys.
    if (small) {
        std::size_t total = 0;
        for (auto& p : small_parts) total += p.size();
        res.small_.reserve(total);
        for (auto& p : small_parts) {
            res.small_.insert(res.small_.end(), p.begin(), p.end());
            std::vector<FopResult::Small>().swap(p);
        }
        sort_unique(res.small_, [&](const FopResult::Small& s) { return small_key(s.M, key); }, order);
    } else {
        for (auto& p : big_parts)
            for (auto& r : p) res.big_.push_back(std::move(r));
        sort_unique(res.big_, [&](const FopRecord& s) { return big_key(s.M, key); }, order);
    }
    res.finish(t_hi);
    return res;
}

FopResult merge_results(std::vector<FopResult> parts) {
    if (parts.empty()) throw std::invalid_argument("merge_results: nothing to merge");
    FopResult res;
    res.dedup_ = parts.front().dedup_;
    res.order_ = parts.front().order_;
    res.families_ = parts.front().families_;
    const FirstOrder order = res.order_;
    bool small = true;
    u64 B = 0;
    for (auto& p : parts) {
        if (p.dedup_ != res.dedup_ || p.order_ != res.order_ || p.families_.size() != res.families_.size())
            throw std::invalid_argument("merge_results: incompatible runs");
        small = small && p.small_mode_;
        B = std::max(B, p.bound_);
        res.stats_.sweep += p.stats_.sweep;
        res.stats_.evaluated += p.stats_.evaluated;
    }
    res.small_mode_ = small;
    const DedupKey key = res.dedup_;
    for (auto& p : parts) {
        if (small) {
            res.small_.insert(res.small_.end(), p.small_.begin(), p.small_.end());
        } else if (p.small_mode_) {
            for (auto& s : p.small_) res.big_.push_back(to_big(s));
        } else {
            for (auto& r : p.big_) res.big_.push_back(std::move(r));
        }
    }
    if (small) {
        sort_unique(res.small_, [&](const FopResult::Small& s) { return small_key(s.M, key); }, order);
    } else {
        sort_unique(res.big_, [&](const FopRecord& s) { return big_key(s.M, key); }, order);
    }
    res.finish(B);
    return res;
}

FopResult run_fop(const PolyFamily& family, std::uint64_t B, DedupKey key, const FopOptions& options) {
    return run_fop_range({family}, 1, B, key, options);
}

FopResult run_fop_multi(const std::vector<PolyFamily>& families, std::uint64_t B, DedupKey key,
                        const FopOptions& options) {
    return run_fop_range(families, 1, B, key, options);
}

GapStats gap_stats(const FopResult& run) {
    const auto& st = run.stats();
    double e = 0;
    if (st.gap > 1 && run.bound() > 1)
        e = std::log(static_cast<double>(st.gap)) / std::log(static_cast<double>(run.bound()));
    return {st.count, st.gap, e};
}

std::optional<QuadInt> record_element(const FopResult& run, const FopRecord& rec) {
    if (rec.degenerate()) return std::nullopt;
    const PolyFamily& fam = run.families().at(rec.family);
    const auto* q = fam.quadratic();
    if (!q) return std::nullopt;
    Int T = fam.trace(rec.t);
    QuadInt a = q->primed ? QuadInt(rec.M, 2 * T, 2 * rec.r) : QuadInt(rec.M, T, rec.r);
    if (a.norm() != q->s * q->nu) throw std::logic_error("record_element: norm mismatch");
    return a;
}

}  // namespace quadfop::fop
