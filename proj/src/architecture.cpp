#include "kelpseg/architecture.hpp"

#include <algorithm>

#include "kelpseg/errors.hpp"
#include "kelpseg/reference_net.hpp"

namespace kelpseg {

namespace {

struct FamilyName {
    EncoderFamily encoder;
    const char* name;
};
constexpr FamilyName kEncoders[] = {
    {EncoderFamily::MIT_B1, "mit_b1"},
    {EncoderFamily::MIT_B2, "mit_b2"},
    {EncoderFamily::MIT_B3, "mit_b3"},
    {EncoderFamily::MIT_B4, "mit_b4"},
    {EncoderFamily::CONVNEXT_TINY, "convnext_tiny"},
    {EncoderFamily::CONVNEXT_BASE, "convnext_base"},
    {EncoderFamily::REFERENCE_TINY, "reference_tiny"},
};

struct DecoderName {
    DecoderFamily decoder;
    const char* name;
};
constexpr DecoderName kDecoders[] = {
    {DecoderFamily::UNET, "unet"},
    {DecoderFamily::UPPERNET, "uppernet"},
    {DecoderFamily::REFERENCE, "reference"},
};

bool is_mit(EncoderFamily e) {
    return e == EncoderFamily::MIT_B1 || e == EncoderFamily::MIT_B2 ||
           e == EncoderFamily::MIT_B3 || e == EncoderFamily::MIT_B4;
}

bool is_convnext(EncoderFamily e) {
    return e == EncoderFamily::CONVNEXT_TINY || e == EncoderFamily::CONVNEXT_BASE;
}

std::shared_ptr<ModelBackend>& backend_slot() {
    static std::shared_ptr<ModelBackend> backend;
    return backend;
}

} // namespace

std::string to_string(EncoderFamily e) {
    for (const auto& f : kEncoders)
        if (f.encoder == e) return f.name;
    return "unknown";
}

std::string to_string(DecoderFamily d) {
    for (const auto& f : kDecoders)
        if (f.decoder == d) return f.name;
    return "unknown";
}

EncoderFamily encoder_from_string(const std::string& s) {
    for (const auto& f : kEncoders)
        if (s == f.name) return f.encoder;
    throw ValidationError("unknown encoder family '" + s + "'");
}

DecoderFamily decoder_from_string(const std::string& s) {
    for (const auto& f : kDecoders)
        if (s == f.name) return f.decoder;
    throw ValidationError("unknown decoder family '" + s + "'");
}

void ArchitectureSpec::validate() const {
    const bool ok = (is_mit(encoder) && decoder == DecoderFamily::UNET) ||
                    (is_convnext(encoder) && decoder == DecoderFamily::UPPERNET) ||
                    (encoder == EncoderFamily::REFERENCE_TINY &&
                     decoder == DecoderFamily::REFERENCE);
    if (!ok)
        throw InvalidPairing(to_string(encoder) + " does not pair with " +
                             to_string(decoder));
    if (encoder != EncoderFamily::REFERENCE_TINY) {
        if (train_size != 512 && train_size != 640 && train_size != 768)
            throw ValidationError("train_size for " + to_string(encoder) +
                                  " must be one of 512, 640, 768");
    }
}

ParameterGroups parameter_groups(SegmentationModel& model) {
    ParameterGroups groups;
    for (const auto& p : model.parameters()) {
        if (p.group == ParamGroup::Encoder)
            groups.encoder.push_back(p);
        else
            groups.decoder.push_back(p);
    }
    return groups;
}

void register_backend(std::shared_ptr<ModelBackend> backend) {
    backend_slot() = std::move(backend);
}

ModelBackend* bound_backend() { return backend_slot().get(); }

std::unique_ptr<SegmentationModel> build_model(const ArchitectureSpec& spec,
                                               std::uint64_t init_seed) {
    spec.validate();
    if (spec.encoder == EncoderFamily::REFERENCE_TINY)
        return std::make_unique<ReferenceNet>(spec, init_seed);
    if (ModelBackend* backend = bound_backend())
        return backend->build(spec, init_seed);
    throw BackendUnavailable(to_string(spec.encoder) + "/" + to_string(spec.decoder) +
                             " needs a bound model backend (reference backend only "
                             "builds reference_tiny)");
}

} // namespace kelpseg
