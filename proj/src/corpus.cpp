namespace aias {}
