#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace toricinv {

// Deterministic work splitting: the index range is cut into fixed chunks
// (independent of the worker count), each chunk produces its own result
// slot, and slots are merged in chunk order. Output is therefore identical
// for any number of threads.
template <typename Result, typename ChunkFn, typename MergeFn>
Result parallel_chunks(std::size_t count, unsigned threads, std::size_t chunk_size,
                       ChunkFn&& chunk_fn, MergeFn&& merge_fn) {
    if (chunk_size == 0) chunk_size = 1;
    std::size_t num_chunks = (count + chunk_size - 1) / chunk_size;
    std::vector<Result> slots(num_chunks);
    if (threads <= 1 || num_chunks <= 1) {
        for (std::size_t ci = 0; ci < num_chunks; ++ci)
            slots[ci] = chunk_fn(ci * chunk_size, std::min(count, (ci + 1) * chunk_size));
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                std::size_t ci = next.fetch_add(1);
                if (ci >= num_chunks) break;
                slots[ci] = chunk_fn(ci * chunk_size, std::min(count, (ci + 1) * chunk_size));
            }
        };
        std::vector<std::thread> pool;
        unsigned nw = std::min<unsigned>(threads, static_cast<unsigned>(num_chunks));
        pool.reserve(nw);
        for (unsigned t = 0; t < nw; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    Result merged{};
    for (std::size_t ci = 0; ci < num_chunks; ++ci) merge_fn(merged, slots[ci]);
    return merged;
}

}  // namespace toricinv
