import itertools, sys, random
N=10; NB=8
ODD=[p for p in itertools.permutations(range(4)) if sum(1 for i in range(4) for j in range(i+1,4) if p[i]>p[j])%2==1]
BND='B'
glue=[[None]*4 for _ in range(N)]
def walk(t,a,b,x):
    """at tet t, edge {a,b}, entered through face opp x; leave via other face. returns (length, end) end in ('closed','bnd','open')"""
    c,d=[v for v in range(4) if v not in (a,b)]
    start=(t,frozenset((a,b)),x)
    n=0
    while True:
        n+=1
        y=c if x==d else d
        g=glue[t][y]
        if g is None: return n,'open'
        if g==BND: return n,('bnd',t,y)
        t2,p=g
        a,b,x=p[a],p[b],p[y]
        t=t2
        c,d=[v for v in range(4) if v not in (a,b)]
        if (t,frozenset((a,b)),x)==start: return n,'closed'
        if n>7: return n,'long'
def edge_ok(t,a,b):
    c,d=[v for v in range(4) if v not in (a,b)]
    n1,e1=walk(t,a,b,c)
    if e1=='closed': return n1==6
    if e1=='long': return False
    n2,e2=walk(t,a,b,d)
    if e2=='long': return False
    n=n1+n2-1
    b1=e1[0]=='bnd'; b2=e2[0]=='bnd'
    if b1 and b2:
        if n!=3: return False
        f1=e1[1:]; f2=e2[1:]
        if f1==f2: return False
        if partner.get(f1,f2)!=f2 or partner.get(f2,f1)!=f1: return False
        partner[f1]=f2; partner[f2]=f1
        return True
    if b1 or b2: return n<=3
    return n<=6
def face_edges_ok(t,i):
    vs=[v for v in range(4) if v!=i]
    return all(edge_ok(t,a,b) for a,b in itertools.combinations(vs,2))
nb=0; used=1; found=[]; partner={}
def first_free():
    for t in range(used):
        for i in range(4):
            if glue[t][i] is None: return t,i
    return None
def inv(p):
    q=[0]*4
    for i,v in enumerate(p): q[v]=i
    return tuple(q)
import time
STOP=lambda g: True
T0=time.time()
def dfs():
    global nb,used
    ff=first_free()
    if ff is None:
        if used==N and nb==NB:
            found.append([row[:] for row in glue]); return STOP(found[-1])
        return False
    t,i=ff
    opts=[]
    if nb<NB: opts.append(('B',))
    for t2 in range(used):
        for j in range(4):
            if (t2,j)>(t,i) and glue[t2][j] is None:
                for p in ODD:
                    if p[i]==j: opts.append(('G',t2,j,p))
    if used<N:
        for p in ODD:
            if p[i]==0: opts.append(('G',used,0,p)); break
    random.shuffle(opts)
    global partner
    for o in opts:
        saved=dict(partner)
        if o[0]=='B':
            glue[t][i]=BND; nb+=1
            if face_edges_ok(t,i) and dfs(): return True
            glue[t][i]=None; nb-=1; partner=saved
        else:
            _,t2,j,p=o
            fresh=(t2==used)
            if fresh: used+=1
            glue[t][i]=(t2,p); glue[t2][j]=(t,inv(p))
            if face_edges_ok(t,i) and dfs(): return True
            glue[t][i]=None; glue[t2][j]=None; partner=saved
            if fresh: used-=1
    return False
if __name__=='__main__':
    random.seed(int(sys.argv[1]))
    print(dfs(), time.time()-T0)
    print(found)
