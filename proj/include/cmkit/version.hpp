#pragma once

#define CMKIT_VERSION "0.1.0"
