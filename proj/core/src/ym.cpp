namespace stk {}
