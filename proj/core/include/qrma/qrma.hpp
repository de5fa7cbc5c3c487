#pragma once

#include "qrma/dynamics.hpp"
#include "qrma/errors.hpp"
#include "qrma/model.hpp"
#include "qrma/rwa.hpp"
#include "qrma/spectrum.hpp"
#include "qrma/squeeze.hpp"
#include "qrma/tridiagonal.hpp"
