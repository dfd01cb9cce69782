#include "alt_partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lincom {

void AltPartitions::bad(VertexId v, const char* what) const {
    throw std::logic_error("alt-partitions: vertex " + std::to_string(v) + ": " + what);
}

void AltPartitions::swap_slots(int a, int b) {
    VertexId va = slot_[a], vb = slot_[b];
    slot_[a] = vb;
    slot_[b] = va;
    pos_[va] = b;
    pos_[vb] = a;
    counters_->cell_writes += 2;
}

void AltPartitions::init_from_scores(std::span<const int> scores, Counters* counters) {
    const int n = static_cast<int>(scores.size());
    counters_ = counters;
    max_k_ = 0;
    for (int s : scores) {
        if (s < 0) throw std::logic_error("alt-partitions: negative initial score");
        max_k_ = std::max(max_k_, s);
    }
    score_.assign(scores.begin(), scores.end());
    cap_ = score_;
    in_cover_.assign(n, 0);
    parked_.assign(n, 0);
    slot_.resize(n);
    pos_.resize(n);
    dead_end_ = 0;
    removable_ = 0;
    cover_size_ = 0;
    cursor_ = max_k_;

    // Counting sort by score; all loss regions start empty, so loss-k and
    // gain-k share a start index until vertices enter the cover.
    std::vector<int> count(max_k_ + 1, 0);
    for (int s : score_) ++count[s];
    loss_start_.assign(max_k_ + 2, 0);
    gain_start_.assign(max_k_ + 1, 0);
    int at = 0;
    for (int k = 0; k <= max_k_; ++k) {
        loss_start_[k] = at;
        gain_start_[k] = at;
        at += count[k];
    }
    loss_start_[max_k_ + 1] = n;

    std::vector<int> cursor(gain_start_.begin(), gain_start_.end());
    for (VertexId v = 0; v < n; ++v) {
        int c = cursor[score_[v]]++;
        slot_[c] = v;
        pos_[v] = c;
    }
}

void AltPartitions::park(std::span<const char> parked) {
    const int n = vertex_count();
    // Buckets in slot order: dead prefix, then loss-k/gain-k ascending.
    std::vector<int> loss_count(max_k_ + 1, 0), gain_count(max_k_ + 1, 0);
    int dead = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (parked[v]) {
            if (!in_cover_[v]) bad(v, "parked vertex must be in the cover");
            ++dead;
        } else if (in_cover_[v]) {
            ++loss_count[score_[v]];
        } else {
            ++gain_count[score_[v]];
        }
    }
    parked_.assign(parked.begin(), parked.end());
    dead_end_ = dead;
    removable_ = 0;
    int at = dead;
    for (int k = 0; k <= max_k_; ++k) {
        loss_start_[k] = at;
        at += loss_count[k];
        removable_ += loss_count[k];
        gain_start_[k] = at;
        at += gain_count[k];
    }
    loss_start_[max_k_ + 1] = n;

    std::vector<int> lcur(loss_start_.begin(), loss_start_.end() - 1);
    std::vector<int> gcur(gain_start_.begin(), gain_start_.end());
    int dcur = 0;
    for (VertexId v = 0; v < n; ++v) {
        int c = parked_[v] ? dcur++ : in_cover_[v] ? lcur[score_[v]]++ : gcur[score_[v]]++;
        slot_[c] = v;
        pos_[v] = c;
    }
}

void AltPartitions::place_into_cover(VertexId v) {
    if (in_cover_[v]) bad(v, "place_into_cover on a cover member");
    if (parked_[v]) bad(v, "place_into_cover on a parked vertex");
    const int k = score_[v];
    swap_slots(pos_[v], gain_start_[k]); // to the front of gain-k ...
    ++gain_start_[k];                    // ... which becomes the back of loss-k
    counters_->cell_writes += 1;
    counters_->partition_moves += 1;
    in_cover_[v] = 1;
    ++cover_size_;
    ++removable_;
}

void AltPartitions::place_out_of_cover(VertexId v) {
    if (!in_cover_[v]) bad(v, "place_out_of_cover on a non-member");
    if (parked_[v]) bad(v, "place_out_of_cover on a parked vertex");
    const int k = score_[v];
    swap_slots(pos_[v], gain_start_[k] - 1); // to the back of loss-k ...
    --gain_start_[k];                        // ... which becomes the front of gain-k
    counters_->cell_writes += 1;
    counters_->partition_moves += 1;
    in_cover_[v] = 0;
    --cover_size_;
    --removable_;
}

void AltPartitions::gain_decrement(VertexId v) {
    if (in_cover_[v]) bad(v, "gain op on a cover member");
    if (parked_[v]) bad(v, "gain op on a parked vertex");
    const int k = score_[v];
    if (k < 1) bad(v, "gain underflow below 0");
    swap_slots(pos_[v], gain_start_[k]); // front of gain-k
    swap_slots(gain_start_[k], loss_start_[k]); // across loss-k to its front
    ++loss_start_[k];
    ++gain_start_[k];
    counters_->cell_writes += 2;
    counters_->partition_moves += 1;
    score_[v] = k - 1;
}

void AltPartitions::gain_increment(VertexId v) {
    if (in_cover_[v]) bad(v, "gain op on a cover member");
    if (parked_[v]) bad(v, "gain op on a parked vertex");
    const int k = score_[v];
    if (k + 1 > cap_[v]) bad(v, "gain overflow above degree");
    swap_slots(pos_[v], loss_start_[k + 1] - 1); // back of gain-k
    swap_slots(loss_start_[k + 1] - 1, gain_start_[k + 1] - 1); // across loss-(k+1)
    --loss_start_[k + 1];
    --gain_start_[k + 1];
    counters_->cell_writes += 2;
    counters_->partition_moves += 1;
    score_[v] = k + 1;
}

void AltPartitions::loss_decrement(VertexId v) {
    if (!in_cover_[v]) bad(v, "loss op on a non-member");
    if (parked_[v]) bad(v, "loss op on a parked vertex");
    const int k = score_[v];
    if (k < 1) bad(v, "loss underflow below 0");
    swap_slots(pos_[v], loss_start_[k]); // front of loss-k
    swap_slots(loss_start_[k], gain_start_[k - 1]); // across gain-(k-1) to its front
    ++gain_start_[k - 1];
    ++loss_start_[k];
    counters_->cell_writes += 2;
    counters_->partition_moves += 1;
    score_[v] = k - 1;
}

void AltPartitions::loss_increment(VertexId v) {
    if (!in_cover_[v]) bad(v, "loss op on a non-member");
    if (parked_[v]) bad(v, "loss op on a parked vertex");
    const int k = score_[v];
    if (k + 1 > cap_[v]) bad(v, "loss overflow above degree");
    swap_slots(pos_[v], gain_start_[k] - 1); // back of loss-k
    swap_slots(gain_start_[k] - 1, loss_start_[k + 1] - 1); // across gain-k
    --gain_start_[k];
    --loss_start_[k + 1];
    counters_->cell_writes += 2;
    counters_->partition_moves += 1;
    score_[v] = k + 1;
}

void AltPartitions::adjust_parked_score(VertexId v, int delta) {
    if (!parked_[v]) bad(v, "adjust_parked_score on an unparked vertex");
    const int s = score_[v] + delta;
    if (s < 0 || s > cap_[v]) bad(v, "parked score out of range");
    score_[v] = s;
    counters_->cell_writes += 1;
}

VertexId AltPartitions::random_min_loss_vertex(Rng& rng, bool deterministic) {
    if (removable_ == 0)
        throw std::runtime_error("all cover vertices fixed: no removable vertex");
    for (int k = 0;; ++k) {
        if (k > max_k_) bad(-1, "min-loss scan ran past the last region");
        ++counters_->boundary_tests;
        const int lo = loss_start_[k], hi = gain_start_[k];
        if (lo == hi) continue;
        if (!deterministic)
            return slot_[lo + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(hi - lo)))];
        VertexId best = slot_[lo];
        for (int i = lo + 1; i < hi; ++i) best = std::min(best, slot_[i]);
        return best;
    }
}

int AltPartitions::min_positive_gain_partition() {
    for (int k = 1;; ++k) {
        if (k > max_k_)
            throw std::logic_error("alt-partitions: no positive gain region is non-empty");
        ++counters_->boundary_tests;
        if (gain_start_[k] < loss_start_[k + 1]) return k;
    }
}

int AltPartitions::descend_max_gain_cursor() {
    for (;;) {
        ++counters_->boundary_tests;
        if (gain_start_[cursor_] < loss_start_[cursor_ + 1]) return cursor_;
        if (cursor_ == 0)
            throw std::logic_error("alt-partitions: max-gain cursor hit 0 with all regions empty");
        --cursor_;
    }
}

VertexId AltPartitions::pick_in_gain_region(int k, Rng& rng, bool deterministic) const {
    const int lo = gain_start_[k], hi = loss_start_[k + 1];
    if (lo >= hi) bad(-1, "pick from empty gain region");
    if (!deterministic)
        return slot_[lo + static_cast<int>(rng.bounded(static_cast<std::uint32_t>(hi - lo)))];
    VertexId best = slot_[lo];
    for (int i = lo + 1; i < hi; ++i) best = std::min(best, slot_[i]);
    return best;
}

std::span<const VertexId> AltPartitions::loss_region(int k) const {
    if (k < 0 || k > max_k_) return {}; // no vertex can score outside [0, max_k_]
    return {slot_.data() + loss_start_[k],
            static_cast<std::size_t>(gain_start_[k] - loss_start_[k])};
}

std::span<const VertexId> AltPartitions::gain_region(int k) const {
    if (k < 0 || k > max_k_) return {};
    return {slot_.data() + gain_start_[k],
            static_cast<std::size_t>(loss_start_[k + 1] - gain_start_[k])};
}

std::string AltPartitions::dump() const {
    std::string out;
    if (dead_end_ > 0) {
        out += "dead:";
        for (int i = 0; i < dead_end_; ++i) out += " v" + std::to_string(slot_[i]);
        out += '\n';
    }
    for (int k = 0; k <= max_k_; ++k) {
        auto l = loss_region(k), g = gain_region(k);
        if (l.empty() && g.empty()) continue;
        out += "loss-" + std::to_string(k) + ":";
        for (VertexId v : l) out += " v" + std::to_string(v);
        out += " | gain-" + std::to_string(k) + ":";
        for (VertexId v : g) out += " v" + std::to_string(v);
        out += '\n';
    }
    return out;
}

void AltPartitions::check_consistency() const {
    const int n = vertex_count();
    auto expect = [](bool ok, const char* what) {
        if (!ok) throw std::logic_error(std::string("alt-partitions inconsistent: ") + what);
    };
    for (int i = 0; i < n; ++i) expect(pos_[slot_[i]] == i, "slot/position not inverse");
    for (VertexId v = 0; v < n; ++v) expect(slot_[pos_[v]] == v, "position/slot not inverse");
    expect(loss_start_[0] == dead_end_, "regions must begin at the dead prefix end");
    int prev = dead_end_;
    for (int k = 0; k <= max_k_; ++k) {
        expect(loss_start_[k] >= prev, "loss start out of order");
        expect(gain_start_[k] >= loss_start_[k], "gain start before loss start");
        prev = gain_start_[k];
    }
    expect(loss_start_[max_k_ + 1] == n, "missing end sentinel");
    expect(prev <= n, "region beyond array");
    int removable = 0, cover = 0;
    for (VertexId v = 0; v < n; ++v) {
        expect(score_[v] >= 0 && score_[v] <= cap_[v], "score out of [0, cap]");
        if (in_cover_[v]) ++cover;
        if (parked_[v]) {
            expect(in_cover_[v], "parked vertex outside cover");
            expect(pos_[v] < dead_end_, "parked vertex outside dead prefix");
            continue;
        }
        expect(pos_[v] >= dead_end_, "live vertex inside dead prefix");
        const int k = score_[v];
        if (in_cover_[v]) {
            ++removable;
            expect(pos_[v] >= loss_start_[k] && pos_[v] < gain_start_[k],
                   "cover member outside its loss region");
        } else {
            expect(pos_[v] >= gain_start_[k] && pos_[v] < loss_start_[k + 1],
                   "outside member not in its gain region");
        }
    }
    expect(removable == removable_, "removable count drifted");
    expect(cover == cover_size_, "cover size drifted");
}

} // namespace lincom
