/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include <olrwa/error.hpp>

namespace olrwa {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::SingularMatrix: return "SingularMatrix";
        case ErrorKind::InconsistentSystem: return "InconsistentSystem";
        case ErrorKind::ZeroVariance: return "ZeroVariance";
        case ErrorKind::Divergence: return "Divergence";
        case ErrorKind::DegenerateHyperplane: return "DegenerateHyperplane";
        case ErrorKind::ZeroAverage: return "ZeroAverage";
        case ErrorKind::ParallelHyperplanes: return "ParallelHyperplanes";
        case ErrorKind::BatchTooSmall: return "BatchTooSmall";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::FileNotFound: return "FileNotFound";
        case ErrorKind::MissingColumn: return "MissingColumn";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}// namespace olrwa
