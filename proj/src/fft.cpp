#include "modspace/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace modspace {
namespace {

std::mutex plan_mutex;

// FFTW planning is not reentrant; executed plans are.  Plans are created once
// per (dims, sign) on a throwaway buffer with FFTW_UNALIGNED so they may later
// run on any caller buffer via the new-array interface.  In-place layout.
fftw_plan get_plan(const std::vector<int>& dims, int sign) {
    static std::map<std::pair<std::vector<int>, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_pair(dims, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::size_t total = 1;
    for (int d : dims) total *= static_cast<std::size_t>(d);
    std::vector<cplx> scratch(total);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), buf, buf,
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan == nullptr) fail("fftw_plan_dft failed");
    cache.emplace(key, plan);
    return plan;
}

// Involutive half-period rotation on every axis (natural order <-> index-zero
// order).  N even per grid contract.
void rotate_half(std::vector<cplx>& data, const std::vector<int>& dims) {
    if (dims.size() == 1) {
        int n = dims[0];
        std::vector<cplx> tmp(data.size());
        for (int i = 0; i < n; ++i) tmp[static_cast<std::size_t>(i)] = data[(i + n / 2) % n];
        data.swap(tmp);
    } else if (dims.size() == 2) {
        int n0 = dims[0], n1 = dims[1];
        std::vector<cplx> tmp(data.size());
        for (int i = 0; i < n0; ++i) {
            int si = (i + n0 / 2) % n0;
            for (int j = 0; j < n1; ++j) {
                int sj = (j + n1 / 2) % n1;
                tmp[static_cast<std::size_t>(i) * n1 + j] =
                    data[static_cast<std::size_t>(si) * n1 + sj];
            }
        }
        data.swap(tmp);
    } else {
        fail("rotate_half: rank > 2 not supported");
    }
}

}  // namespace

void raw_dft(std::vector<cplx>& data, const std::vector<int>& dims, int sign) {
    std::size_t total = 1;
    for (int d : dims) {
        require(d > 0, "raw_dft: nonpositive dimension");
        total *= static_cast<std::size_t>(d);
    }
    require(data.size() == total, "raw_dft: size mismatch");
    fftw_plan plan = get_plan(dims, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
}

void centered_dft(std::vector<cplx>& data, const std::vector<int>& dims, int sign) {
    for (int d : dims) require(d % 2 == 0, "centered_dft: axis length must be even");
    rotate_half(data, dims);
    raw_dft(data, dims, sign);
    rotate_half(data, dims);
}

}  // namespace modspace
