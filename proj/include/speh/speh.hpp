#pragma once

#include "speh/certificate.hpp"
#include "speh/classifier.hpp"
#include "speh/half_int.hpp"
#include "speh/lfactor.hpp"
#include "speh/model.hpp"
#include "speh/normalization.hpp"
