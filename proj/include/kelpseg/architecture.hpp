#ifndef KELPSEG_ARCHITECTURE_HPP
#define KELPSEG_ARCHITECTURE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "kelpseg/grid.hpp"

namespace kelpseg {

enum class EncoderFamily {
    MIT_B1,
    MIT_B2,
    MIT_B3,
    MIT_B4,
    CONVNEXT_TINY,
    CONVNEXT_BASE,
    REFERENCE_TINY,
};

enum class DecoderFamily {
    UNET,
    UPPERNET,
    REFERENCE,
};

std::string to_string(EncoderFamily e);
std::string to_string(DecoderFamily d);
EncoderFamily encoder_from_string(const std::string& s);
DecoderFamily decoder_from_string(const std::string& s);

// MIT encoders pair with UNET, ConvNeXt with UPPERNET, REFERENCE_TINY
// with REFERENCE. train_size is one of {512, 640, 768} for the paper
// families and unrestricted for the reference net.
struct ArchitectureSpec {
    EncoderFamily encoder = EncoderFamily::REFERENCE_TINY;
    DecoderFamily decoder = DecoderFamily::REFERENCE;
    std::size_t train_size = 512;
    bool pretrained = false;

    void validate() const; // throws InvalidPairing / ValidationError
};

enum class ParamGroup { Encoder, Decoder };

// Named view over a parameter tensor and its gradient buffer. A grad
// tensor with no elements means "absent" (reset-to-absent semantics).
struct ParamRef {
    std::string name;
    ParamGroup group;
    Tensor* value = nullptr;
    Tensor* grad = nullptr;

    bool grad_present() const { return grad != nullptr && !grad->empty(); }
};

// A trained parameterized function from image batches to logit maps.
// forward(train_mode=true) caches activations; backward consumes the
// cache and accumulates parameter gradients.
class SegmentationModel {
public:
    virtual ~SegmentationModel() = default;

    virtual const ArchitectureSpec& spec() const = 0;

    // batch: each item 3 x S x S. Returns one S x S logit map per item.
    virtual std::vector<FloatGrid> forward(const std::vector<Tensor>& batch,
                                           bool train_mode) = 0;

    // logit_grads: dLoss/dlogit for the last train-mode forward.
    virtual void backward(const std::vector<FloatGrid>& logit_grads) = 0;

    virtual std::vector<ParamRef> parameters() = 0;

    // set_to_absent releases gradient buffers instead of zero-filling.
    virtual void zero_grads(bool set_to_absent) = 0;
};

// Disjoint, exhaustive partition of parameters by module provenance.
struct ParameterGroups {
    std::vector<ParamRef> encoder;
    std::vector<ParamRef> decoder;
};
ParameterGroups parameter_groups(SegmentationModel& model);

// Narrow backend interface through which the paper architectures are
// reached when a heavyweight implementation is linked in.
class ModelBackend {
public:
    virtual ~ModelBackend() = default;
    virtual std::string name() const = 0;
    virtual std::unique_ptr<SegmentationModel> build(const ArchitectureSpec& spec,
                                                     std::uint64_t init_seed) = 0;
};

void register_backend(std::shared_ptr<ModelBackend> backend);
ModelBackend* bound_backend();

// Builds a model for the spec: REFERENCE_TINY natively, paper families
// through the bound backend. Throws InvalidPairing, BackendUnavailable.
std::unique_ptr<SegmentationModel> build_model(const ArchitectureSpec& spec,
                                               std::uint64_t init_seed = 0);

} // namespace kelpseg

#endif // KELPSEG_ARCHITECTURE_HPP
