#pragma once

#define SPHSUP_VERSION_STRING "0.1.0"
