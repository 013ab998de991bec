#ifndef KELPSEG_REFERENCE_NET_HPP
#define KELPSEG_REFERENCE_NET_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kelpseg/architecture.hpp"

namespace kelpseg {

// Small self-contained encoder-decoder so the whole pipeline runs and
// trains without an external deep-learning backend.
//
// Topology (about 54k parameters, total stride 16):
//   stem:   conv3x3 3->8, relu
//   enc k:  conv3x3 stride 2 (down) + conv3x3, relu after each,
//           channels 8 -> 12 -> 16 -> 24 -> 32
//   dec k:  nearest 2x upsample, concat encoder skip, conv3x3, relu
//   head:   conv1x1 8->1, logits out (sigmoid belongs to callers)
//
// Accepts any square input whose side is divisible by 16. All math in
// double; gradients are exact analytic backprop.
class ReferenceNet : public SegmentationModel {
public:
    static constexpr std::size_t kStride = 16;
    static constexpr std::array<std::size_t, 5> kChannels = {8, 12, 16, 24, 32};

    ReferenceNet(const ArchitectureSpec& spec, std::uint64_t init_seed);

    const ArchitectureSpec& spec() const override { return spec_; }
    std::vector<FloatGrid> forward(const std::vector<Tensor>& batch,
                                   bool train_mode) override;
    void backward(const std::vector<FloatGrid>& logit_grads) override;
    std::vector<ParamRef> parameters() override;
    void zero_grads(bool set_to_absent) override;

private:
    struct Conv {
        std::string name;
        ParamGroup group = ParamGroup::Encoder;
        std::size_t in_ch = 0, out_ch = 0, ksize = 3, stride = 1;
        Tensor weight; // out x in x k x k
        Tensor bias;   // out
        Tensor wgrad;  // empty when absent
        Tensor bgrad;
    };

    struct SampleCache {
        Tensor input;
        Tensor a_stem;
        std::array<Tensor, 4> a_down;
        std::array<Tensor, 4> a_enc;
        std::array<Tensor, 4> a_dec; // a_dec[k-1] is the stage-k decoder output
    };

    Tensor run_forward(const Tensor& input, SampleCache* cache) const;
    void run_backward(const SampleCache& cache, const FloatGrid& logit_grad);

    ArchitectureSpec spec_;
    Conv stem_;
    std::array<Conv, 4> enc_down_;
    std::array<Conv, 4> enc_conv_;
    std::array<Conv, 4> dec_conv_;
    Conv head_;
    std::vector<SampleCache> caches_;
    std::vector<Conv*> all_convs_;
};

} // namespace kelpseg

#endif // KELPSEG_REFERENCE_NET_HPP
